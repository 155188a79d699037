#include "qtorus/json_io.hpp"

#include <stdexcept>

namespace qtorus {

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

json approx(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json rational_to_json(const Rational& q) {
  return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
  Rational q(integer_from_json(j[0]), integer_from_json(j[1]));
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  q.canonicalize();
  return q;
}

json to_json(const CycloElement& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational_to_json(c));
  return json{{"order", x.context().order()}, {"coeffs", std::move(coeffs)}, {"approx", approx(x.to_complex())}};
}

CycloElement cyclo_from_json(const CycloContext& ctx, const json& j) {
  if (j.at("order").get<int>() != ctx.order()) throw std::invalid_argument("cyclotomic order mismatch");
  std::vector<Rational> poly;
  for (const auto& c : j.at("coeffs")) poly.push_back(rational_from_json(c));
  return CycloElement(ctx, std::move(poly));
}

json to_json(const Scalar& s) {
  return json{{"xpow", s.xpow()}, {"value", to_json(s.value())}, {"approx", approx(s.to_complex())}};
}

Scalar scalar_from_json(const CycloContext& ctx, const json& j) {
  return Scalar(cyclo_from_json(ctx, j.at("value")), j.at("xpow").get<int>());
}

json to_json(const OperatorMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  const int level = static_cast<int>(m.rows()) + 1;
  return json{{"level", level}, {"rows", m.rows()}, {"entries", std::move(rows)}};
}

OperatorMatrix matrix_from_json(const CycloContext& ctx, const json& j) {
  if (j.at("level").get<int>() != ctx.level()) throw std::invalid_argument("matrix level mismatch");
  OperatorMatrix m = zero_matrix(ctx);
  const auto& rows = j.at("entries");
  if (rows.size() != m.rows()) throw std::invalid_argument("matrix row count mismatch");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("matrix column count mismatch");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = scalar_from_json(ctx, rows[i][k]);
  }
  return m;
}

json to_json(const ProductToSum& res) {
  return json{{"d", res.d}, {"ok", res.ok()}, {"lhs", to_json(res.lhs)}, {"rhs", to_json(res.rhs)}};
}

json to_json(const KernelReport& rep) {
  return json{{"level", rep.level},
              {"N", rep.bound},
              {"symbols", rep.symbols},
              {"dim_ker_op", rep.dim_ker_op},
              {"dim_ker_nc", rep.dim_ker_nc},
              {"nc_subset_op", rep.nc_subset_op},
              {"dim_ker_clock", rep.dim_ker_clock},
              {"clock_subset_op", rep.clock_subset_op}};
}

json to_json(const ContinuedFraction& cf) { return json(cf.a); }

json to_json(const LemmaTuple& t) { return json::array({t.a, t.b, t.c, t.d, t.e}); }

}  // namespace qtorus
