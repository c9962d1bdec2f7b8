#include "wreathlab/morse_orbit.hpp"

#include <cstdlib>
#include <stdexcept>

namespace wreathlab {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long positive_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
}

void check_compatible(const HElement& x, const HElement& y) {
  if (x.rank() != y.rank() || x.variant != y.variant) {
    throw std::invalid_argument("elements have mismatched rank or variant");
  }
}

}  // namespace

IntVector phi_apply(const IntVector& s, PhiVariant variant) {
  if (s.empty()) throw std::invalid_argument("empty coordinate vector");
  std::size_t n = s.size();
  IntVector out(n);
  out[0] = variant == PhiVariant::Signed ? -s[n - 1] : s[n - 1];
  for (std::size_t i = 1; i < n; ++i) out[i] = s[i - 1];
  return out;
}

IntVector phi_iterate(const IntVector& s, long long alpha, PhiVariant variant) {
  if (s.empty()) throw std::invalid_argument("empty coordinate vector");
  long long n = static_cast<long long>(s.size());
  long long period = variant == PhiVariant::Signed ? 2 * n : n;
  long long a = positive_mod(alpha, period);
  IntVector out(s.size());
  for (long long j = 0; j < n; ++j) {
    long long slot = j + a;
    long long wraps = slot / n;
    slot -= wraps * n;
    long long value = s[static_cast<std::size_t>(j)];
    if (variant == PhiVariant::Signed && (wraps & 1)) value = -value;
    out[static_cast<std::size_t>(slot)] = value;
  }
  return out;
}

IntMatrix phi_matrix(int n, PhiVariant variant) {
  check_rank(n);
  IntMatrix m = IntMatrix::Zero(n, n);
  m(0, n - 1) = variant == PhiVariant::Signed ? -1 : 1;
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
  return m;
}

IntMatrix phi_power(int n, long long alpha, PhiVariant variant) {
  check_rank(n);
  if (std::llabs(alpha) > 1'000'000) {
    throw std::invalid_argument("phi_power exponent out of supported range");
  }
  IntMatrix base = phi_matrix(n, variant);
  IntMatrix acc = IntMatrix::Identity(n, n);
  for (long long i = 0; i < std::llabs(alpha); ++i) acc = base * acc;
  if (alpha < 0) return acc.transpose();
  return acc;
}

IntMatrix phi_power_closed_form(int n, long long alpha) {
  check_rank(n);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (long long k = 1; k <= n; ++k) {
    long long column = positive_mod(k - alpha, n);
    if (column == 0) column = n;
    long long sign = (floor_div(alpha + n - k, n) & 1) ? -1 : 1;
    m(static_cast<int>(k - 1), static_cast<int>(column - 1)) = sign;
  }
  return m;
}

bool is_signed_permutation(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  int n = static_cast<int>(m.rows());
  std::vector<int> column_hits(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int nonzero = 0;
    for (int j = 0; j < n; ++j) {
      long long v = m(i, j);
      if (v == 0) continue;
      if (v != 1 && v != -1) return false;
      ++nonzero;
      ++column_hits[static_cast<std::size_t>(j)];
    }
    if (nonzero != 1) return false;
  }
  for (int hits : column_hits) {
    if (hits != 1) return false;
  }
  return true;
}

bool HElement::is_identity() const {
  if (k != 0) return false;
  for (long long v : s) {
    if (v != 0) return false;
  }
  return true;
}

HElement h_identity(int n, PhiVariant variant) {
  check_rank(n);
  return HElement{0, IntVector(static_cast<std::size_t>(n), 0), variant};
}

HElement h_rho(int n, PhiVariant variant, long long power) {
  HElement e = h_identity(n, variant);
  e.k = power;
  return e;
}

HElement h_tau(int n, int index, PhiVariant variant, long long power) {
  if (index < 1 || index > n) throw std::invalid_argument("tau index out of range");
  HElement e = h_identity(n, variant);
  e.s[static_cast<std::size_t>(index - 1)] = power;
  return e;
}

HElement h_mul(const HElement& x, const HElement& y) {
  check_compatible(x, y);
  HElement out;
  out.variant = x.variant;
  out.k = x.k + y.k;
  out.s = phi_iterate(x.s, -y.k, x.variant);
  for (std::size_t i = 0; i < out.s.size(); ++i) out.s[i] += y.s[i];
  return out;
}

HElement h_inv(const HElement& x) {
  HElement out;
  out.variant = x.variant;
  out.k = -x.k;
  out.s = phi_iterate(x.s, x.k, x.variant);
  for (long long& v : out.s) v = -v;
  return out;
}

namespace {

void check_word(const HWord& word, int n) {
  for (const WordLetter& letter : word.letters) {
    if (letter.symbol < 0 || letter.symbol > n) {
      throw std::invalid_argument("word letter index out of range");
    }
    if (letter.exponent == 0) {
      throw std::invalid_argument("word letter exponent must be nonzero");
    }
  }
}

// merge adjacent letters with equal symbols, dropping cancelled ones
void coalesce(std::vector<WordLetter>& letters) {
  std::size_t write = 0;
  for (std::size_t read = 0; read < letters.size(); ++read) {
    if (write > 0 && letters[write - 1].symbol == letters[read].symbol) {
      letters[write - 1].exponent += letters[read].exponent;
      if (letters[write - 1].exponent == 0) --write;
    } else {
      letters[write++] = letters[read];
    }
  }
  letters.resize(write);
}

}  // namespace

HElement evaluate_word(const HWord& word, int n, PhiVariant variant) {
  check_rank(n);
  check_word(word, n);
  HElement acc = h_identity(n, variant);
  for (const WordLetter& letter : word.letters) {
    HElement next = letter.symbol == 0 ? h_rho(n, variant, letter.exponent)
                                       : h_tau(n, letter.symbol, variant, letter.exponent);
    acc = h_mul(acc, next);
  }
  return acc;
}

HElement normalize(const HWord& word, int n, PhiVariant variant) {
  check_rank(n);
  check_word(word, n);
  std::vector<WordLetter> letters = word.letters;
  coalesce(letters);

  // bubble rho letters to the front one position at a time
  while (true) {
    std::size_t j = 0;
    bool found = false;
    for (std::size_t i = 1; i < letters.size(); ++i) {
      if (letters[i].symbol == 0 && letters[i - 1].symbol != 0) {
        j = i;
        found = true;
        break;
      }
    }
    if (!found) break;

    long long step = letters[j].exponent > 0 ? 1 : -1;
    WordLetter tau = letters[j - 1];
    int index = tau.symbol;
    long long exponent = tau.exponent;
    if (step > 0) {
      // tau_i rho = rho tau_{i-1}, wrapping 1 -> n with a sign flip
      if (index == 1) {
        index = n;
        if (variant == PhiVariant::Signed) exponent = -exponent;
      } else {
        --index;
      }
    } else {
      // tau_i rho^-1 = rho^-1 tau_{i+1}, wrapping n -> 1 with a sign flip
      if (index == n) {
        index = 1;
        if (variant == PhiVariant::Signed) exponent = -exponent;
      } else {
        ++index;
      }
    }

    long long remainder = letters[j].exponent - step;
    letters[j - 1] = WordLetter{0, step};
    letters[j] = WordLetter{index, exponent};
    if (remainder != 0) {
      letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                     WordLetter{0, remainder});
    }
    coalesce(letters);
  }

  HElement out = h_identity(n, variant);
  for (const WordLetter& letter : letters) {
    if (letter.symbol == 0) {
      out.k += letter.exponent;
    } else {
      out.s[static_cast<std::size_t>(letter.symbol - 1)] += letter.exponent;
    }
  }
  return out;
}

bool is_trivial_word(const HWord& word, int n, PhiVariant variant) {
  return normalize(word, n, variant).is_identity();
}

std::vector<HWord> presentation_relators(int n, PhiVariant variant) {
  check_rank(n);
  std::vector<HWord> relators;
  for (int i = 1; i <= n; ++i) {
    int target = i == n ? 1 : i + 1;
    long long exponent = -1;
    if (i == n && variant == PhiVariant::Signed) exponent = 1;  // rho tau_n rho^-1 = tau_1^-1
    HWord r;
    r.letters = {WordLetter{0, 1}, WordLetter{i, 1}, WordLetter{0, -1},
                 WordLetter{target, exponent}};
    relators.push_back(std::move(r));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      HWord r;
      r.letters = {WordLetter{i, 1}, WordLetter{j, 1}, WordLetter{i, -1},
                   WordLetter{j, -1}};
      relators.push_back(std::move(r));
    }
  }
  return relators;
}

bool RelationReport::all_passed() const {
  for (const RelationCheck& check : checks) {
    if (!check.passed) return false;
  }
  return true;
}

RelationReport check_relations(int n, PhiVariant variant) {
  check_rank(n);
  RelationReport report;
  auto conjugate = [&](const HElement& g, long long power) {
    return h_mul(h_mul(h_rho(n, variant, power), g), h_rho(n, variant, -power));
  };
  HElement tau1 = h_tau(n, 1, variant);

  report.checks.push_back({"rho^n tau rho^-n = tau^-1",
                           conjugate(tau1, n) == h_inv(tau1), ""});

  {
    bool ok = true;
    for (long long i = 1; i < n && ok; ++i) {
      for (long long j = 1; j < n && ok; ++j) {
        HElement a = conjugate(tau1, i);
        HElement b = conjugate(tau1, j);
        ok = h_mul(a, b) == h_mul(b, a);
      }
    }
    report.checks.push_back({"rho-conjugates of tau commute (0 < i,j < n)", ok, ""});
  }

  report.checks.push_back({"rho^2n tau rho^-2n = tau",
                           conjugate(tau1, 2LL * n) == tau1, ""});

  {
    HElement rho2n = h_rho(n, variant, 2LL * n);
    HElement lhs = h_mul(h_mul(h_inv(tau1), rho2n), tau1);
    report.checks.push_back({"tau^-1 rho^2n tau = rho^2n", lhs == rho2n, ""});
  }

  {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) {
      ok = conjugate(h_tau(n, i, variant), 1) == h_tau(n, i + 1, variant);
    }
    report.checks.push_back({"rho tau_i rho^-1 = tau_{i+1} (i < n)", ok, ""});
  }

  {
    HElement expected = variant == PhiVariant::Signed
                            ? h_tau(n, 1, variant, -1)
                            : h_tau(n, 1, variant, 1);
    bool ok = conjugate(h_tau(n, n, variant), 1) == expected;
    std::string name = variant == PhiVariant::Signed
                           ? "rho tau_n rho^-1 = tau_1^-1 (signed wrap)"
                           : "rho tau_n rho^-1 = tau_1 (unsigned wrap)";
    report.checks.push_back({name, ok, ""});
  }

  {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      for (int j = 1; j <= n && ok; ++j) {
        HElement a = h_tau(n, i, variant);
        HElement b = h_tau(n, j, variant);
        ok = h_mul(a, b) == h_mul(b, a);
      }
    }
    report.checks.push_back({"tau_i tau_j = tau_j tau_i", ok, ""});
  }

  return report;
}

bool is_central(const HElement& x) {
  int n = x.rank();
  HElement rho = h_rho(n, x.variant);
  if (!(h_mul(x, rho) == h_mul(rho, x))) return false;
  for (int i = 1; i <= n; ++i) {
    HElement tau = h_tau(n, i, x.variant);
    if (!(h_mul(x, tau) == h_mul(tau, x))) return false;
  }
  return true;
}

}  // namespace wreathlab
