#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pauli_super/codimension.hpp"
#include "pauli_super/exponent.hpp"
#include "pauli_super/int_matrix.hpp"
#include "pauli_super/report.hpp"
#include "pauli_super/super_p.hpp"

namespace pauli_super {

using Json = nlohmann::ordered_json;

/// Reals go out as decimal strings with 12 significant digits.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Nested arrays of decimal strings.
inline Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_decimal(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from_json(const Json& j) {
  const std::size_t r = j.size(), c = r ? j.at(0).size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (j.at(i).size() != c) throw DimensionError("matrix_from_json: ragged rows");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = BigInt(j.at(i).at(k).get<std::string>());
  }
  return m;
}

inline Json report_to_json(const Report& r) {
  Json items = Json::array();
  for (const auto& it : r.items)
    items.push_back({{"name", it.name}, {"passed", it.passed}, {"checked", it.checked}, {"detail", it.detail}, {"witnesses", it.witnesses}});
  return {{"title", r.title}, {"passed", r.passed()}, {"items", std::move(items)}};
}

/// {q, support: [hex], lambda: [[g, h, lambda]]}; one triple per ordered pair
/// with gh in the support, zero lambdas included.
inline Json structure_table_to_json(const GradedSuperalgebra& alg, const StructureTable& table) {
  Json support = Json::array();
  for (const auto& g : alg.support()) support.push_back(g.to_hex());
  Json lambda = Json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j)
      if (table.product(i, j) >= 0)
        lambda.push_back(Json::array({alg.element(i).g.to_hex(), alg.element(j).g.to_hex(), table.lambda(i, j)}));
  return {{"q", alg.q()}, {"support", std::move(support)}, {"lambda", std::move(lambda)}};
}

inline std::string structure_table_to_csv(const GradedSuperalgebra& alg, const StructureTable& table) {
  std::ostringstream os;
  os << "g,h,lambda\n";
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j)
      if (table.product(i, j) >= 0) os << alg.element(i).g.to_hex() << ',' << alg.element(j).g.to_hex() << ',' << table.lambda(i, j) << '\n';
  return os.str();
}

/// Reads a structure-table JSON export back into the table indexed by alg's basis.
inline StructureTable structure_table_from_json(const Json& j, const GradedSuperalgebra& alg) {
  if (j.at("q").get<unsigned>() != alg.q()) throw DimensionError("structure_table_from_json: q mismatch");
  const std::size_t d = alg.dim();
  std::vector<std::int64_t> lambda(d * d, 0);
  std::vector<int> product(d * d, -1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) product[i * d + k] = alg.index_of_bits((alg.element(i).g * alg.element(k).g).bits());
  for (const auto& e : j.at("lambda")) {
    const auto g = alg.index_of(GradingGroupElement::from_hex(alg.q(), e.at(0).get<std::string>()));
    const auto h = alg.index_of(GradingGroupElement::from_hex(alg.q(), e.at(1).get<std::string>()));
    if (!g || !h) throw std::invalid_argument("structure_table_from_json: degree outside the support");
    lambda[*g * d + *h] = e.at(2).get<std::int64_t>();
  }
  return {d, std::move(lambda), std::move(product)};
}

}  // namespace pauli_super
