#include "deltaop/io.hpp"

#include <fstream>
#include <sstream>

namespace deltaop {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field \"") + key + "\": " + e.what());
  }
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw FormatError(std::string("missing array field \"") + key + "\"");
  }
  return j.at(key);
}

Prime prime_field(const Json& j) {
  auto p = field<long long>(j, "p");
  if (p < 2 || p > 0xffffffffLL || !is_prime(static_cast<Prime>(p))) {
    throw FormatError("field \"p\": " + std::to_string(p) + " is not a prime");
  }
  return static_cast<Prime>(p);
}

int nonneg_field(const Json& j, const char* key) {
  auto v = field<long long>(j, key);
  if (v < 0 || v > 1 << 20) throw FormatError(std::string("field \"") + key + "\" out of range");
  return static_cast<int>(v);
}

std::size_t disc_count(Prime p, int m) {
  std::size_t c = 1;
  for (int i = 0; i < m; ++i) c *= p;
  return c;
}

std::vector<unsigned> beta_from_json(const Json& j, Prime p, int m) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(m)) {
    throw FormatError("multi-index must be an array of length " + std::to_string(m));
  }
  std::vector<unsigned> beta;
  for (const auto& b : j) {
    if (!b.is_number_integer() || b.get<long long>() < 0 || b.get<long long>() >= p) {
      throw FormatError("multi-index entry out of range [0, p)");
    }
    beta.push_back(b.get<unsigned>());
  }
  return beta;
}

void check_index_order(const Json& j, const IndexOrder& order) {
  const Json& arr = array_field(j, "index_order");
  if (arr.size() != order.size()) throw FormatError("index_order has the wrong length");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (beta_from_json(arr[i], order.prime(), order.m()) != order[i]) {
      throw FormatError("index_order is not the lexicographic ordering");
    }
  }
}

}  // namespace

Json to_json(const PadicInt& x) {
  return Json{{"p", x.prime()}, {"N", x.precision()}, {"v", x.value().get_str()}};
}

PadicInt padic_from_json(const Json& j) {
  const Prime p = prime_field(j);
  const int n = nonneg_field(j, "N");
  if (n < 1) throw FormatError("field \"N\": precision must be at least 1");
  if (!j.contains("v")) throw FormatError("missing field \"v\"");
  mpz_class v;
  const Json& jv = j.at("v");
  if (jv.is_string()) {
    if (v.set_str(jv.get<std::string>(), 10) != 0) {
      throw FormatError("field \"v\": not a decimal integer");
    }
  } else if (jv.is_number_integer()) {
    v = mpz_class(std::to_string(jv.get<long long>()));
  } else {
    throw FormatError("field \"v\": expected a decimal string");
  }
  if (v < 0 || v >= prime_power(p, n)) throw FormatError("field \"v\": not reduced mod p^N");
  return make_reduced(p, n, v);
}

Json to_json(const PadicPoly& poly) {
  Json coeffs = Json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"p", poly.prime()}, {"var", "u"}, {"coeffs", std::move(coeffs)}};
}

PadicPoly poly_from_json(const Json& j) {
  const Prime p = prime_field(j);
  if (field<std::string>(j, "var") != "u") throw FormatError("field \"var\" must be \"u\"");
  std::vector<PadicInt> coeffs;
  for (const auto& c : array_field(j, "coeffs")) {
    coeffs.push_back(padic_from_json(c));
    if (coeffs.back().prime() != p) throw FormatError("coefficient with the wrong prime");
  }
  return PadicPoly(p, std::move(coeffs));
}

Json to_json(const IndexOrder& order) {
  Json arr = Json::array();
  for (const auto& beta : order.betas()) arr.push_back(beta);
  return arr;
}

Json to_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (std::size_t alpha = 0; alpha < rs.size(); ++alpha) {
    Json it = Json::array();
    for (const auto& x : rs.iterates[alpha]) it.push_back(to_json(x));
    roots.push_back(
        Json{{"alpha", alpha}, {"root", to_json(rs.roots[alpha])}, {"iterates", std::move(it)}});
  }
  return Json{{"p", rs.p},
              {"m", rs.m},
              {"N", rs.precision},
              {"index_order", to_json(IndexOrder(rs.p, rs.m))},
              {"roots", std::move(roots)}};
}

RootSystem roots_from_json(const Json& j) {
  RootSystem rs;
  rs.p = prime_field(j);
  rs.m = nonneg_field(j, "m");
  rs.precision = nonneg_field(j, "N");
  check_index_order(j, IndexOrder(rs.p, rs.m));
  const Json& roots = array_field(j, "roots");
  if (roots.size() != disc_count(rs.p, rs.m)) throw FormatError("roots: wrong number of roots");
  for (std::size_t alpha = 0; alpha < roots.size(); ++alpha) {
    if (nonneg_field(roots[alpha], "alpha") != static_cast<int>(alpha)) {
      throw FormatError("roots must be listed in residue order");
    }
    rs.roots.push_back(padic_from_json(roots[alpha].at("root")));
    std::vector<PadicInt> it;
    for (const auto& x : array_field(roots[alpha], "iterates")) it.push_back(padic_from_json(x));
    if (it.size() != static_cast<std::size_t>(rs.m) + 1) {
      throw FormatError("roots: each root needs m+1 iterates");
    }
    rs.iterates.push_back(std::move(it));
  }
  return rs;
}

Json to_json(const WMatrix& w, const DetCertificate& cert) {
  Json rows = Json::array();
  for (std::size_t alpha = 0; alpha < w.dim; ++alpha) {
    Json row = Json::array();
    for (std::size_t beta = 0; beta < w.dim; ++beta) row.push_back(to_json(w.at(alpha, beta)));
    rows.push_back(std::move(row));
  }
  Json det{{"unit", cert.unit}, {"det_mod_p", cert.det_mod_p},
           {"valuation", cert.valuation.value}, {"valuation_is_lower_bound", cert.valuation.at_least}};
  return Json{{"p", w.p},
              {"m", w.m},
              {"N", w.precision},
              {"index_order", to_json(w.order)},
              {"rows", std::move(rows)},
              {"determinant", std::move(det)}};
}

WMatrix wmatrix_from_json(const Json& j) {
  WMatrix w;
  w.p = prime_field(j);
  w.m = nonneg_field(j, "m");
  w.precision = nonneg_field(j, "N");
  w.order = IndexOrder(w.p, w.m);
  check_index_order(j, w.order);
  w.dim = w.order.size();
  const Json& rows = array_field(j, "rows");
  if (rows.size() != w.dim) throw FormatError("rows: wrong number of rows");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != w.dim) throw FormatError("rows: wrong row length");
    for (const auto& e : row) w.entries.push_back(padic_from_json(e));
  }
  return w;
}

Json to_json(const LocalFunctionData& local) {
  Json discs = Json::array();
  for (std::size_t alpha = 0; alpha < local.series.size(); ++alpha) {
    Json coeffs = Json::array();
    for (const auto& g : local.series[alpha]) coeffs.push_back(to_json(g));
    discs.push_back(Json{{"alpha", alpha}, {"coeffs", std::move(coeffs)}});
  }
  return Json{{"p", local.p},
              {"m", local.m},
              {"N", local.precision},
              {"K", local.K},
              {"discs", std::move(discs)}};
}

LocalFunctionData local_from_json(const Json& j) {
  LocalFunctionData local;
  local.p = prime_field(j);
  local.m = nonneg_field(j, "m");
  local.precision = nonneg_field(j, "N");
  local.K = nonneg_field(j, "K");
  const std::size_t count = disc_count(local.p, local.m);
  local.series.resize(count);
  std::vector<bool> seen(count, false);
  for (const auto& d : array_field(j, "discs")) {
    auto alpha = static_cast<std::size_t>(nonneg_field(d, "alpha"));
    if (alpha >= count) throw FormatError("discs: alpha out of range");
    if (seen[alpha]) throw FormatError("discs: duplicate alpha " + std::to_string(alpha));
    seen[alpha] = true;
    for (const auto& c : array_field(d, "coeffs")) local.series[alpha].push_back(padic_from_json(c));
  }
  for (std::size_t alpha = 0; alpha < count; ++alpha) {
    if (!seen[alpha]) throw FormatError("discs: missing alpha " + std::to_string(alpha));
  }
  try {
    local.validate();
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  return local;
}

Json to_json(const CanonicalSeries& f) {
  Json terms = Json::array();
  for (int n = 0; n <= f.K(); ++n) {
    for (std::size_t beta = 0; beta < f.order().size(); ++beta) {
      terms.push_back(
          Json{{"beta", f.order()[beta]}, {"n", n}, {"coeff", to_json(f.coeff(beta, n))}});
    }
  }
  return Json{{"p", f.prime()}, {"m", f.m()}, {"K", f.K()}, {"terms", std::move(terms)}};
}

CanonicalSeries canonical_from_json(const Json& j) {
  const Prime p = prime_field(j);
  const int m = nonneg_field(j, "m");
  const int K = nonneg_field(j, "K");
  const Json& terms = array_field(j, "terms");
  if (terms.empty()) throw FormatError("terms: at least one term is required");

  struct Term {
    std::size_t beta;
    int n;
    PadicInt coeff;
  };
  const IndexOrder order(p, m);
  std::vector<Term> parsed;
  int precision = -1;
  for (const auto& t : terms) {
    auto beta = beta_from_json(t.contains("beta") ? t.at("beta") : Json(), p, m);
    const int n = nonneg_field(t, "n");
    if (n > K) throw FormatError("terms: n exceeds K");
    if (!t.contains("coeff")) throw FormatError("terms: missing coeff");
    PadicInt c = padic_from_json(t.at("coeff"));
    if (c.prime() != p) throw FormatError("terms: coefficient with the wrong prime");
    precision = precision < 0 ? c.precision() : std::min(precision, c.precision());
    parsed.push_back({order.index_of(beta), n, std::move(c)});
  }
  // Terms not listed are zero at the smallest listed precision.
  CanonicalSeries f(p, m, K, precision);
  std::vector<bool> seen(order.size() * static_cast<std::size_t>(K + 1), false);
  for (auto& t : parsed) {
    const std::size_t key = static_cast<std::size_t>(t.n) * order.size() + t.beta;
    if (seen[key]) throw FormatError("terms: duplicate (beta, n)");
    seen[key] = true;
    f.coeff(t.beta, t.n) = std::move(t.coeff);
  }
  return f;
}

Json to_json(const BoundsReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    const char* claim = c.claim == BoundClaim::constant_term  ? "constant_term"
                        : c.claim == BoundClaim::linear_exact ? "linear_exact"
                                                              : "higher_degree";
    const char* status = c.status == BoundStatus::pass       ? "pass"
                         : c.status == BoundStatus::violated ? "violated"
                                                             : "undecidable";
    checks.push_back(Json{{"claim", claim},
                          {"degree", c.degree},
                          {"valuation", c.observed.value},
                          {"valuation_is_lower_bound", c.observed.at_least},
                          {"required", c.required},
                          {"status", status}});
  }
  return Json{{"all_pass", report.all_pass()}, {"checks", std::move(checks)}};
}

PadicInt parse_point(const std::string& text, Prime p) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw FormatError("point must be written v/N, got \"" + text + "\"");
  mpz_class v;
  if (v.set_str(text.substr(0, slash), 10) != 0) throw FormatError("point value is not an integer");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1) throw FormatError("point precision is not an integer");
  } catch (const std::logic_error&) {
    throw FormatError("point precision is not an integer");
  }
  if (n < 1) throw FormatError("point precision must be at least 1");
  return make_reduced(p, n, v);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace deltaop
