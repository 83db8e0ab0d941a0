#include "hinges/json_io.hpp"

#include <sstream>

namespace hinges {

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of arrays");
  std::vector<std::vector<Rational>> rows;
  for (const auto& jr : j) {
    if (!jr.is_array()) throw std::invalid_argument("matrix row must be an array");
    std::vector<Rational> row;
    for (const auto& e : jr) row.push_back(parse_rational(e.get<std::string>()));
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(rows);
}

json relation_to_json(const LinearRelation& r) {
  return json{{"dim_v", r.dim_v()},
              {"dim_w", r.dim_w()},
              {"basis", matrix_to_json(r.space().basis())}};
}

LinearRelation relation_from_json(const json& j) {
  std::size_t dv = j.at("dim_v").get<std::size_t>();
  std::size_t dw = j.at("dim_w").get<std::size_t>();
  RationalMatrix b = matrix_from_json(j.at("basis"));
  if (b.rows() == 0) return LinearRelation::zero_relation(dv, dw);
  if (b.cols() != dv + dw)
    throw std::invalid_argument("relation basis width must be dim_v + dim_w");
  return LinearRelation(dv, dw, Subspace(dv + dw, b));
}

json hinge_to_json(const Hinge& h) {
  json terms = json::array();
  for (const auto& t : h.terms()) terms.push_back(relation_to_json(t));
  return json{{"n", h.n()}, {"terms", std::move(terms)}};
}

Hinge hinge_from_json(const json& j) {
  std::vector<LinearRelation> terms;
  for (const auto& t : j.at("terms")) terms.push_back(relation_from_json(t));
  Hinge h = validate_hinge(terms);
  if (j.contains("n") && j.at("n").get<std::size_t>() != h.n())
    throw std::invalid_argument("hinge ambient dimension disagrees with terms");
  return h;
}

json weak_hinge_to_json(const WeakHinge& w) {
  json terms = json::array();
  for (const auto& t : w.terms) terms.push_back(relation_to_json(t));
  return json{{"n", w.n}, {"terms", std::move(terms)}};
}

WeakHinge weak_hinge_from_json(const json& j) {
  std::vector<LinearRelation> terms;
  for (const auto& t : j.at("terms")) terms.push_back(relation_from_json(t));
  return validate_weak(j.at("n").get<std::size_t>(), terms);
}

json exterior_to_json(const ExteriorOperator& op) {
  return json{{"n_in", op.n_in},
              {"n_out", op.n_out},
              {"k_in", op.k_in},
              {"k_out", op.k_out},
              {"matrix", matrix_to_json(op.mat)}};
}

ExteriorOperator exterior_from_json(const json& j) {
  ExteriorOperator op;
  op.n_in = j.at("n_in").get<std::size_t>();
  op.n_out = j.at("n_out").get<std::size_t>();
  op.k_in = j.at("k_in").get<std::size_t>();
  op.k_out = j.at("k_out").get<std::size_t>();
  op.mat = matrix_from_json(j.at("matrix"));
  return op;
}

json glued_to_json(const GluedFamily& f) {
  json blocks = json::array();
  for (std::size_t m = 0; m < f.blocks.size(); ++m)
    blocks.push_back(exterior_to_json(ExteriorOperator{f.n, f.n, m, m, f.blocks[m]}));
  return json{{"n", f.n},
              {"blocks", std::move(blocks)},
              {"under", weak_hinge_to_json(f.under)}};
}

GluedFamily glued_from_json(const json& j) {
  GluedFamily f;
  f.n = j.at("n").get<std::size_t>();
  for (const auto& b : j.at("blocks")) f.blocks.push_back(matrix_from_json(b.at("matrix")));
  if (f.blocks.size() != f.n + 1)
    throw std::invalid_argument("glued family needs one block per degree");
  f.under = weak_hinge_from_json(j.at("under"));
  return f;
}

json laurent_matrix_to_json(const LaurentMatrix& g) {
  json entries = json::array();
  for (std::size_t i = 0; i < g.n; ++i) {
    json row = json::array();
    for (std::size_t jj = 0; jj < g.n; ++jj) {
      json terms = json::array();
      for (const auto& [e, c] : g(i, jj).coeffs())
        terms.push_back(json::array({e, rational_str(c)}));
      row.push_back(std::move(terms));
    }
    entries.push_back(std::move(row));
  }
  return json{{"n", g.n}, {"entries", std::move(entries)}};
}

LaurentMatrix laurent_matrix_from_json(const json& j) {
  std::size_t n = j.at("n").get<std::size_t>();
  LaurentMatrix g(n);
  const auto& entries = j.at("entries");
  if (entries.size() != n) throw std::invalid_argument("entry rows != n");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw std::invalid_argument("entry cols != n");
    for (std::size_t jj = 0; jj < n; ++jj) {
      LaurentPoly p;
      for (const auto& term : entries[i][jj]) {
        if (!term.is_array() || term.size() != 2)
          throw std::invalid_argument("laurent term must be [exponent, coefficient]");
        long e = term[0].get<long>();
        Rational c = parse_rational(term[1].get<std::string>());
        p.set_coeff(e, p.coeff(e) + c);
      }
      g(i, jj) = std::move(p);
    }
  }
  return g;
}

json exponent_data_to_json(const ExponentData& e) {
  return json{{"m", e.m}, {"k", e.k}, {"alpha", e.alpha}};
}

json rep_operator_to_json(const RepOperator& op, std::size_t space_dim) {
  return json{{"signature", op.nu}, {"dim", space_dim}, {"matrix", matrix_to_json(op.mat)}};
}

json urchin_point_to_json(const UrchinPoint& p) {
  if (const auto* in = std::get_if<InteriorPoint>(&p))
    return json{{"type", "interior"}, {"g", matrix_to_json(in->g)}};
  const auto& s = std::get<SpikePoint>(p);
  return json{{"type", "spike"}, {"m", s.m}, {"hinge", hinge_to_json(s.hinge)}};
}

UrchinPoint urchin_point_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "interior") {
    RationalMatrix g = matrix_from_json(j.at("g"));
    if (g.det() == 0) throw std::invalid_argument("interior point must be invertible");
    return InteriorPoint{std::move(g)};
  }
  if (type == "spike")
    return make_spike(j.at("m").get<std::vector<long>>(),
                      hinge_from_json(j.at("hinge")));
  throw std::invalid_argument("unknown urchin point type: " + type);
}

json projection_to_json(const UrchinProjection& p) {
  json blocks = json::array();
  for (std::size_t l = 0; l < p.blocks.size(); ++l)
    blocks.push_back(json{{"signature", p.signatures[l]},
                          {"weight", p.weights[l]},
                          {"zeroed", static_cast<bool>(p.zeroed[l])},
                          {"matrix", matrix_to_json(p.blocks[l].mat)}});
  return json{{"vmax", p.vmax}, {"blocks", std::move(blocks)}};
}

Signature parse_signature(const std::string& text) {
  Signature nu;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw std::invalid_argument("empty signature component");
    std::size_t pos = 0;
    long v = std::stol(part, &pos);
    if (pos != part.size()) throw std::invalid_argument("bad signature component: " + part);
    nu.push_back(v);
  }
  if (nu.empty()) throw std::invalid_argument("empty signature");
  return nu;
}

}  // namespace hinges
