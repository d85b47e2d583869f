#include "wilsonlab/bernoulli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "wilsonlab/error.hpp"
#include "wilsonlab/primes.hpp"

namespace wilsonlab {

namespace {

void require_index(std::size_t n, const BernoulliTable& table) {
  if (n > table.max_index()) {
    throw Error(ErrorKind::IndexOutOfTable,
                "B_" + std::to_string(n) + " requested from a table ending at " + std::to_string(table.max_index()));
  }
}

// Invariants shared by freshly built and cache-loaded tables.
void validate(const std::vector<ExactRational>& b) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::CacheFormat, what); };
  if (b.empty() || b[0] != 1) fail("B_0 must be 1");
  if (b.size() > 1 && b[1] != make_rational(-1, 2)) fail("B_1 must be -1/2");
  if (b.size() > 2 && b[2] != make_rational(1, 6)) fail("B_2 must be 1/6");
  for (std::size_t n = 3; n < b.size(); n += 2) {
    if (b[n] != 0) fail("B_" + std::to_string(n) + " must vanish");
  }
  for (std::size_t n = 2; n < b.size(); n += 2) {
    if (Integer(b[n].get_den()) != vsc_denominator(n)) {
      fail("denominator of B_" + std::to_string(n) + " violates von Staudt-Clausen");
    }
  }
}

}  // namespace

BernoulliTable BernoulliTable::build(std::size_t max_index) {
  if (max_index > kMaxTableIndex) {
    throw Error(ErrorKind::IndexOutOfTable, "exact table capped at index " + std::to_string(kMaxTableIndex));
  }
  std::vector<ExactRational> b;
  b.reserve(max_index + 1);
  b.emplace_back(1);
  // row holds C(n+1, k) for k = 0..n+1
  std::vector<Integer> row{Integer(1), Integer(1)};
  ExactRational sum;
  for (std::size_t n = 1; n <= max_index; ++n) {
    std::vector<Integer> next(n + 2);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t k = 1; k <= n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);

    sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (b[k] == 0) continue;
      sum += row[k] * b[k];
    }
    sum /= -static_cast<long>(n + 1);
    b.push_back(sum);
  }
  return BernoulliTable(std::move(b));
}

BernoulliTable BernoulliTable::from_values(std::vector<ExactRational> values) {
  for (auto& v : values) v.canonicalize();
  validate(values);
  return BernoulliTable(std::move(values));
}

const ExactRational& BernoulliTable::operator[](std::size_t n) const {
  require_index(n, *this);
  return values_[n];
}

void write_table(std::ostream& out, const BernoulliTable& table) {
  for (std::size_t n = 0; n <= table.max_index(); ++n) {
    const auto& v = table[n];
    out << n << '\t' << v.get_num().get_str() << '/' << v.get_den().get_str() << '\n';
  }
}

BernoulliTable read_table(std::istream& in) {
  std::vector<ExactRational> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    const auto slash = line.find('/', tab == std::string::npos ? 0 : tab);
    if (tab == std::string::npos || slash == std::string::npos) {
      throw Error(ErrorKind::CacheFormat, "malformed line: " + line);
    }
    std::size_t index = 0;
    try {
      index = std::stoul(line.substr(0, tab));
    } catch (const std::exception&) {
      throw Error(ErrorKind::CacheFormat, "bad index: " + line);
    }
    if (index != values.size()) throw Error(ErrorKind::CacheFormat, "indices must run 0, 1, 2, ...");
    Integer num, den;
    if (num.set_str(line.substr(tab + 1, slash - tab - 1), 10) != 0 ||
        den.set_str(line.substr(slash + 1), 10) != 0 || den <= 0) {
      throw Error(ErrorKind::CacheFormat, "bad rational: " + line);
    }
    values.push_back(make_rational(num, den));
  }
  return BernoulliTable::from_values(std::move(values));
}

BernoulliTable load_or_build_table(std::size_t max_index, const std::filesystem::path& path) {
  if (std::ifstream in{path}) {
    try {
      BernoulliTable cached = read_table(in);
      if (cached.max_index() >= max_index) return cached;
    } catch (const Error&) {
      // fall through and rebuild
    }
  }
  BernoulliTable table = BernoulliTable::build(max_index);
  std::ofstream out{path};
  if (out) write_table(out, table);
  return table;
}

// --- polynomials ----------------------------------------------------------

PolynomialRational::PolynomialRational(std::vector<ExactRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRational PolynomialRational::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : ExactRational(0);
}

ExactRational PolynomialRational::operator()(const ExactRational& x) const {
  ExactRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer PolynomialRational::denominator() const {
  Integer l(1);
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Valuation PolynomialRational::ord_p(std::uint64_t p) const {
  Valuation best = Valuation::infinity();
  for (const auto& c : coeffs_) best = std::min(best, wilsonlab::ord_p(c, p));
  return best;
}

PolynomialRational operator-(const PolynomialRational& a, const PolynomialRational& b) {
  const std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
  std::vector<ExactRational> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return PolynomialRational(std::move(c));
}

PolynomialRational bernoulli_polynomial(std::size_t n, const BernoulliTable& table) {
  require_index(n, table);
  std::vector<ExactRational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = binomial(n, k) * table[n - k];
  return PolynomialRational(std::move(c));
}

PolynomialRational reduced_bernoulli_polynomial(std::size_t n, const BernoulliTable& table) {
  if (n == 0) throw Error(ErrorKind::PreconditionViolated, "B~_n needs n >= 1");
  PolynomialRational b = bernoulli_polynomial(n, table);
  std::vector<ExactRational> c = b.coefficients();
  c[0] = 0;
  return PolynomialRational(std::move(c));
}

PolynomialRational power_sum_polynomial(std::size_t n, const BernoulliTable& table, PowerSumForm form) {
  if (n == 0) throw Error(ErrorKind::PreconditionViolated, "S_0 is handled by callers as m - 1");
  require_index(n + 1, table);
  std::vector<ExactRational> c(n + 2);
  switch (form) {
    case PowerSumForm::Appell:
      for (std::size_t k = 1; k <= n + 1; ++k) {
        c[k] = binomial(n + 1, k) * table[n + 1 - k] / static_cast<long>(n + 1);
      }
      break;
    case PowerSumForm::Integrated:
      for (std::size_t v = 0; v <= n; ++v) {
        c[v + 1] = binomial(n, v) * table[n - v] / static_cast<long>(v + 1);
      }
      break;
  }
  return PolynomialRational(std::move(c));
}

// --- denominators -----------------------------------------------------------

Integer vsc_denominator(std::uint64_t n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "vsc_denominator needs even n >= 2");
  Integer out(1);
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::uint64_t e = n / d;
    if (is_prime(d + 1)) out *= static_cast<unsigned long>(d + 1);
    if (e != d && is_prime(e + 1)) out *= static_cast<unsigned long>(e + 1);
  }
  return out;
}

Integer dn_product(std::uint64_t n) {
  Integer out(1);
  for (std::uint64_t p : primes_between(2, n)) {
    if (digit_sum(n, p) >= p) out *= static_cast<unsigned long>(p);
  }
  return out;
}

// --- adjusted and divided values --------------------------------------------

ExactRational adjusted_bernoulli(std::size_t n, std::uint64_t p, const BernoulliTable& table) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::PreconditionViolated, "B^_n needs an odd prime");
  if (n % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "B^_n needs an even index");
  if (n == 0) return ExactRational(0);
  const ExactRational& b = table[n];
  if (n % (p - 1) == 0) return b + make_rational(1, static_cast<long>(p)) - 1;
  return b;
}

ExactRational divided_bernoulli(DividedKind kind, std::size_t index, std::uint64_t p,
                                const BernoulliTable& table) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  switch (kind) {
    case DividedKind::Beta: {
      if (index < 2 || index % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "beta_n needs even n >= 2");
      return adjusted_bernoulli(index, p, table) / static_cast<long>(index);
    }
    case DividedKind::Bar: {
      if (index < 1) throw Error(ErrorKind::PreconditionViolated, "B-bar_d needs d >= 1");
      if (p == 2) {
        if (index != 1) throw Error(ErrorKind::PreconditionViolated, "B-bar_d at p = 2 is defined for d = 1 only");
        return table[1] + make_rational(1, 2) - 1;
      }
      const std::size_t n = index * (p - 1);
      return adjusted_bernoulli(n, p, table) / static_cast<long>(n);
    }
    case DividedKind::Bar2: {
      if (index < 1) throw Error(ErrorKind::PreconditionViolated, "B-bar_{d,2} needs d >= 1");
      if (p < 5) throw Error(ErrorKind::PreconditionViolated, "B-bar_{d,2} needs p >= 5");
      const std::size_t n = index * (p - 1) - 2;
      return table[n] / static_cast<long>(n);
    }
  }
  throw Error(ErrorKind::PreconditionViolated, "unknown divided kind");
}

ExactRational power_sum_remainder(std::size_t d, std::uint64_t p, const BernoulliTable& table) {
  if (p < 5 || !is_prime(p) || d < 1) {
    throw Error(ErrorKind::PreconditionViolated, "remainder needs a prime p >= 5 and d >= 1");
  }
  const std::size_t n = d * (p - 1);
  Integer s(0), term;
  for (std::uint64_t a = 1; a < p; ++a) {
    mpz_ui_pow_ui(term.get_mpz_t(), a, n);
    s += term;
  }
  const Integer pz(static_cast<unsigned long>(p));
  ExactRational rest = make_rational(s - (pz - 1), pz) - adjusted_bernoulli(n, p, table);
  Integer pv(1);
  for (std::size_t v = 2; v + 3 <= p; v += 2) {
    pv *= pz * pz;  // p^v
    rest -= ExactRational(binomial(n, v + 1) * pv) * divided_bernoulli(DividedKind::Beta, n - v, p, table);
  }
  return rest;
}

}  // namespace wilsonlab
