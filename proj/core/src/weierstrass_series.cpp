#include "knfam/weierstrass_series.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace knfam {

static const MultiPoly poly_zero{};

const MultiPoly &LaurentSeries::coeff(int exp) const {
  if (exp > trunc)
    throw TruncationTooShallow("coefficient at z^" + std::to_string(exp) +
                               " requested, series truncated at z^" +
                               std::to_string(trunc));
  if (exp < low)
    return poly_zero;
  return coeffs[static_cast<std::size_t>(exp - low)];
}

LaurentSeries LaurentSeries::zero(int trunc) {
  LaurentSeries s;
  s.low = trunc + 1;
  s.trunc = trunc;
  return s;
}

LaurentSeries LaurentSeries::monomial(int exp, const MultiPoly &c, int trunc) {
  std::vector<MultiPoly> v;
  if (exp <= trunc)
    v.assign(static_cast<std::size_t>(trunc - exp + 1), MultiPoly{});
  if (!v.empty())
    v[0] = c;
  return make_series(exp, trunc, std::move(v));
}

LaurentSeries make_series(int low, int trunc, std::vector<MultiPoly> coeffs) {
  std::size_t skip = 0;
  while (skip < coeffs.size() && coeffs[skip].is_zero())
    ++skip;
  LaurentSeries s;
  s.trunc = trunc;
  if (skip == coeffs.size()) {
    s.low = trunc + 1;
  } else {
    s.low = low + static_cast<int>(skip);
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(skip));
    s.coeffs = std::move(coeffs);
  }
  return s;
}

LaurentSeries operator+(const LaurentSeries &f, const LaurentSeries &g) {
  int trunc = std::min(f.trunc, g.trunc);
  int low = std::min(f.low, g.low);
  if (low > trunc)
    return LaurentSeries::zero(trunc);
  std::vector<MultiPoly> v(static_cast<std::size_t>(trunc - low + 1));
  for (int e = f.low; e <= std::min(f.trunc, trunc); ++e)
    v[static_cast<std::size_t>(e - low)] += f.coeff(e);
  for (int e = g.low; e <= std::min(g.trunc, trunc); ++e)
    v[static_cast<std::size_t>(e - low)] += g.coeff(e);
  return make_series(low, trunc, std::move(v));
}

LaurentSeries operator-(const LaurentSeries &f) {
  LaurentSeries r = f;
  for (auto &c : r.coeffs)
    c = -c;
  return r;
}

LaurentSeries operator-(const LaurentSeries &f, const LaurentSeries &g) {
  return f + (-g);
}

LaurentSeries operator*(const LaurentSeries &f, const LaurentSeries &g) {
  int trunc = std::min(f.trunc + g.low, g.trunc + f.low);
  int low = f.low + g.low;
  if (f.is_zero() || g.is_zero() || low > trunc)
    return LaurentSeries::zero(trunc);
  std::vector<MultiPoly> v(static_cast<std::size_t>(trunc - low + 1));
  for (int i = f.low; i <= f.trunc; ++i) {
    const MultiPoly &fc = f.coeff(i);
    if (fc.is_zero())
      continue;
    int jmax = std::min(g.trunc, trunc - i);
    for (int j = g.low; j <= jmax; ++j) {
      const MultiPoly &gc = g.coeff(j);
      if (!gc.is_zero())
        v[static_cast<std::size_t>(i + j - low)] += fc * gc;
    }
  }
  return make_series(low, trunc, std::move(v));
}

LaurentSeries series_scale(const LaurentSeries &f, const MultiPoly &c) {
  if (c.is_zero())
    return LaurentSeries::zero(f.trunc);
  LaurentSeries r = f;
  for (auto &x : r.coeffs)
    x = x * c;
  return make_series(r.low, r.trunc, std::move(r.coeffs));
}

LaurentSeries series_invert(const LaurentSeries &f) {
  if (f.is_zero())
    throw InversionLeadingNonUnit("cannot invert a series that vanishes to "
                                  "truncation");
  const MultiPoly &lead = f.coeffs[0];
  if (!lead.is_constant() || lead.constant_term() == 0)
    throw InversionLeadingNonUnit("leading coefficient '" +
                                  poly_to_string(lead) +
                                  "' is not a nonzero rational constant");
  Rational c0 = lead.constant_term();
  int rel = f.trunc - f.low; // relative precision, preserved by inversion
  /* Write f = c0 z^L (1 + w), invert the unit part by the convolution
     recurrence v_0 = 1, v_k = -sum_{i=1..k} w_i v_{k-i}. */
  std::vector<MultiPoly> w(static_cast<std::size_t>(rel + 1));
  Rational inv_c0 = Rational(1) / c0;
  for (int k = 0; k <= rel; ++k)
    w[static_cast<std::size_t>(k)] =
        f.coeff(f.low + k) * MultiPoly(inv_c0);
  std::vector<MultiPoly> v(static_cast<std::size_t>(rel + 1));
  v[0] = MultiPoly(1);
  for (int k = 1; k <= rel; ++k) {
    MultiPoly acc;
    for (int i = 1; i <= k; ++i)
      acc += w[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(k - i)];
    v[static_cast<std::size_t>(k)] = -acc;
  }
  for (auto &x : v)
    x = x * MultiPoly(inv_c0);
  return make_series(-f.low, rel - f.low, std::move(v));
}

LaurentSeries series_pow(const LaurentSeries &f, int exp) {
  if (exp < 0)
    return series_pow(series_invert(f), -exp);
  if (exp == 0)
    return LaurentSeries::monomial(0, MultiPoly(1), f.trunc - f.low);
  LaurentSeries r = f;
  --exp;
  LaurentSeries base = f;
  /* simple chain; exponents here are small */
  while (exp > 0) {
    r = r * base;
    --exp;
  }
  return r;
}

LaurentSeries series_derivative(const LaurentSeries &f) {
  if (f.is_zero())
    return LaurentSeries::zero(f.trunc - 1);
  std::vector<MultiPoly> v(f.coeffs.size());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i)
    v[i] = f.coeffs[i] * MultiPoly(f.low + static_cast<int>(i));
  return make_series(f.low - 1, f.trunc - 1, std::move(v));
}

LaurentSeries series_truncate(const LaurentSeries &f, int order) {
  if (order >= f.trunc)
    return f;
  if (f.is_zero() || order < f.low)
    return LaurentSeries::zero(order);
  std::vector<MultiPoly> v(f.coeffs.begin(),
                           f.coeffs.begin() + (order - f.low + 1));
  return make_series(f.low, order, std::move(v));
}

LaurentSeries wp_series(int order) {
  if (order < 4)
    throw Error("wp_series: order must be >= 4");
  static std::map<int, LaurentSeries> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto it = memo.find(order);
  if (it != memo.end())
    return it->second;

  const MultiPoly g2 = MultiPoly::var(ParamId::g2);
  const MultiPoly g3 = MultiPoly::var(ParamId::g3);
  int K = order / 2; // p = z^-2 + sum_{k=1..K} c_k z^(2k)
  std::vector<MultiPoly> c(static_cast<std::size_t>(K) + 1);
  if (K >= 1)
    c[1] = g2 * MultiPoly(Rational(1, 20));
  if (K >= 2)
    c[2] = g3 * MultiPoly(Rational(1, 28));
  for (int k = 3; k <= K; ++k) {
    MultiPoly acc;
    for (int i = 1; i <= k - 2; ++i)
      acc += c[static_cast<std::size_t>(i)] *
             c[static_cast<std::size_t>(k - 1 - i)];
    c[static_cast<std::size_t>(k)] =
        acc * MultiPoly(Rational(3, (2 * k + 3) * (k - 2)));
  }
  std::vector<MultiPoly> v(static_cast<std::size_t>(order + 3));
  v[0] = MultiPoly(1); // z^-2
  for (int k = 1; k <= K; ++k)
    v[static_cast<std::size_t>(2 * k + 2)] = c[static_cast<std::size_t>(k)];
  LaurentSeries s = make_series(-2, order, std::move(v));
  memo.emplace(order, s);
  return s;
}

const SubstMap &default_e_bindings() {
  static const SubstMap bindings = [] {
    const MultiPoly e1 = MultiPoly::var(ParamId::e1);
    const MultiPoly e2 = MultiPoly::var(ParamId::e2);
    SubstMap b;
    b[ParamId::g2] = MultiPoly(4) * (e1 * e1 + e1 * e2 + e2 * e2);
    b[ParamId::g3] = MultiPoly(-4) * e1 * e2 * (e1 + e2);
    return b;
  }();
  return bindings;
}

static LaurentSeries series_substitute(const LaurentSeries &f,
                                       const SubstMap &bindings) {
  std::vector<MultiPoly> v(f.coeffs.size());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i)
    v[i] = poly_substitute(f.coeffs[i], bindings);
  return make_series(f.low, f.trunc, std::move(v));
}

static std::string bindings_signature(const SubstMap &bindings) {
  std::ostringstream os;
  for (const auto &[id, p] : bindings)
    os << param_name(id) << ":=" << poly_to_string(p) << ";";
  return os.str();
}

LaurentSeries basis_series(int n, int order, const SubstMap &e_bindings) {
  using Key = std::tuple<int, int, std::string>;
  static std::map<Key, LaurentSeries> memo;
  static std::mutex memo_mutex;
  Key key{n, order, bindings_signature(e_bindings)};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end())
      return it->second;
  }

  int margin = order + std::abs(n) + 4;
  LaurentSeries wp = series_substitute(wp_series(std::max(margin, 4)),
                                       e_bindings);
  MultiPoly e1_bound = poly_substitute(MultiPoly::var(ParamId::e1), e_bindings);
  LaurentSeries base =
      wp - LaurentSeries::monomial(0, e1_bound, wp.trunc); // p - e1

  LaurentSeries result;
  if (n % 2 == 0) {
    result = series_pow(base, n / 2);
  } else {
    int k = (n - 1) / 2; // n = 2k+1
    LaurentSeries half_dwp =
        series_scale(series_derivative(wp), MultiPoly(Rational(1, 2)));
    result = half_dwp * series_pow(base, k - 1);
  }
  result = series_truncate(result, order);
  if (result.trunc < order)
    throw TruncationTooShallow("basis_series(" + std::to_string(n) +
                               "): internal margin insufficient");
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(std::move(key), result);
  return result;
}

MultiPoly residue(const LaurentSeries &ser) {
  if (ser.trunc < -1)
    throw TruncationTooShallow("residue: series truncated below z^-1");
  return ser.coeff(-1);
}

MultiPoly residue_of_product(const LaurentSeries &f, const LaurentSeries &g) {
  int trunc = std::min(f.trunc + g.low, g.trunc + f.low);
  if (trunc < -1)
    throw TruncationTooShallow("residue_of_product: truncation budget too "
                               "shallow for the z^-1 coefficient");
  MultiPoly acc;
  for (int i = f.low; i <= f.trunc; ++i) {
    int j = -1 - i;
    if (j < g.low || j > g.trunc)
      continue;
    const MultiPoly &fc = f.coeff(i);
    if (fc.is_zero())
      continue;
    acc += fc * g.coeff(j);
  }
  return acc;
}

} // namespace knfam
