#include "atqft/json_io.hpp"

#include <fstream>
#include <sstream>

#include "atqft/errors.hpp"

namespace atqft {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

Json torsion_to_json(const std::vector<Integer>& orders) {
  Json out = Json::array();
  for (const auto& p : orders) out.push_back(integer_to_json(p));
  return out;
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      throw ParseError("not an integer: '" + j.get<std::string>() + "'");
    return x;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json matrix_to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const Json& j) {
  const Json& rows_j = require(j, "rows");
  const Json& cols_j = require(j, "cols");
  const Json& entries = require(j, "entries");
  if (!rows_j.is_number_unsigned() || !cols_j.is_number_unsigned())
    throw ParseError("'rows' and 'cols' must be nonnegative integers");
  const auto rows = rows_j.get<std::size_t>();
  const auto cols = cols_j.get<std::size_t>();
  if (!entries.is_array() || entries.size() != rows)
    throw ParseError("'entries' must be an array of " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(row[c]);
  }
  return m;
}

ChainComplex chain_complex_from_json(const Json& j) {
  return ChainComplex{matrix_from_json(require(j, "d3")), matrix_from_json(require(j, "d2")),
                      matrix_from_json(require(j, "d1"))};
}

Json chain_complex_to_json(const ChainComplex& c) {
  return Json{{"d3", matrix_to_json(c.d3)}, {"d2", matrix_to_json(c.d2)}, {"d1", matrix_to_json(c.d1)}};
}

Json group_to_json(const AbelianGroup& g) {
  return Json{{"free_rank", g.free_rank()}, {"torsion", torsion_to_json(g.torsion_orders())}};
}

Json linking_form_to_json(const LinkingForm& form) {
  Json q = Json::array();
  for (const auto& row : form.matrix()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.value().get_str());
    q.push_back(std::move(r));
  }
  return Json{{"torsion", torsion_to_json(form.group().torsion_orders())}, {"q", std::move(q)}};
}

LinkingForm linking_form_from_json(const Json& j) {
  const Json& torsion = require(j, "torsion");
  const Json& q = require(j, "q");
  if (!torsion.is_array() || !q.is_array()) throw ParseError("'torsion' and 'q' must be arrays");
  std::vector<Integer> orders;
  for (const auto& p : torsion) orders.push_back(integer_from_json(p));
  std::vector<std::vector<ModOne>> entries;
  for (const auto& row : q) {
    if (!row.is_array()) throw ParseError("'q' rows must be arrays");
    auto& out = entries.emplace_back();
    for (const auto& x : row) {
      if (!x.is_string()) throw ParseError("'q' entries must be fraction strings");
      out.push_back(ModOne::parse(x.get<std::string>()));
    }
  }
  return LinkingForm(AbelianGroup(0, std::move(orders)), std::move(entries));
}

Json cyclotomic_to_json(const CyclotomicNumber& a) {
  Json coeffs = Json::object();
  for (const auto& [k, c] : a.coeffs()) coeffs[std::to_string(k)] = integer_to_json(c);
  return Json{{"order", a.order()}, {"coeffs", std::move(coeffs)}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
  const Json& order = require(j, "order");
  const Json& coeffs = require(j, "coeffs");
  if (!order.is_number_integer() || order.get<std::int64_t>() < 1)
    throw ParseError("'order' must be a positive integer");
  if (!coeffs.is_object()) throw ParseError("'coeffs' must be an object");
  std::map<std::int64_t, Integer> map;
  for (const auto& [key, value] : coeffs.items()) {
    std::size_t used = 0;
    std::int64_t k = 0;
    try {
      k = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw ParseError("bad exponent key '" + key + "'");
    map[k] += integer_from_json(value);
  }
  return CyclotomicNumber(order.get<std::int64_t>(), map);
}

Json numeric_to_json(const GaussianApprox& a) {
  return Json{{"re", a.re}, {"im", a.im}, {"err", a.err}};
}

Json partition_to_json(const PartitionResult& r) {
  return Json{{"theory", to_string(r.theory)},
              {"level", r.level.value()},
              {"torsion", torsion_to_json(r.torsion)},
              {"method", to_string(r.method)},
              {"exact", cyclotomic_to_json(r.exact)},
              {"numeric", numeric_to_json(r.numeric)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what(), e.byte);
  }
}

}  // namespace atqft
