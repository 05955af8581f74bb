#include "lucaslcm/periodic.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lucaslcm {

std::vector<CosetSolution> coset_solutions(uint32_t a, uint64_t r, uint64_t m) {
  if (!valid_index_class(a)) throw std::invalid_argument("coset_solutions: a must be in {1,2,3,6}");
  if (m == 0 || r == 0 || r > m) throw std::invalid_argument("coset_solutions: need 1 <= r <= m");
  std::vector<CosetSolution> out;
  for (uint64_t t = 1; t <= m; ++t) {
    for (uint64_t u = 1; u <= a * m; ++u) {
      if ((t * u) % m != r % m) continue;
      if (std::gcd(static_cast<uint64_t>(a), u) != 1) continue;
      out.push_back({t, u});
      break;
    }
  }
  return out;
}

std::vector<Progression> union_decomposition(uint32_t a, uint64_t r, uint64_t m,
                                             const ExactRational& kappa) {
  if (kappa <= 0) throw std::invalid_argument("union_decomposition: kappa > 0 required");
  std::vector<Progression> out;
  for (const CosetSolution& cs : coset_solutions(a, r, m)) {
    Progression p;
    p.residue = a * cs.t;  // in [1, a*m] since t in [1, m]
    p.modulus = a * m;
    p.lambda = kappa * static_cast<unsigned long>(a) / static_cast<unsigned long>(cs.u);
    out.push_back(p);
  }
  return out;
}

std::map<uint64_t, ExactRational> refine_and_merge(const std::vector<Progression>& progs,
                                                   uint64_t M) {
  if (M == 0) throw std::invalid_argument("refine_and_merge: M >= 1 required");
  for (const Progression& p : progs) {
    if (M % p.modulus)
      throw std::invalid_argument("refine_and_merge: M must be a common multiple of all moduli");
  }
  std::map<uint64_t, ExactRational> merged;
  for (const Progression& p : progs) {
    for (uint64_t rho = p.residue; rho <= M; rho += p.modulus) {
      auto it = merged.find(rho);
      if (it == merged.end())
        merged.emplace(rho, p.lambda);
      else if (p.lambda > it->second)
        it->second = p.lambda;
    }
  }
  return merged;
}

static std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> ps;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

ExactRational density_constant(uint64_t r, uint64_t M) {
  if (M == 0 || r == 0 || r > M) throw std::invalid_argument("density_constant: need 1 <= r <= M");
  ExactRational c = make_rational(1, static_cast<long>(M));
  for (uint64_t p : prime_divisors(M)) {
    const long pl = static_cast<long>(p);
    if (r % p == 0)
      c *= make_rational(pl, pl + 1);  // (1 + 1/p)^-1
    else
      c *= make_rational(pl * pl, pl * pl - 1);  // (1 - 1/p^2)^-1
  }
  return c;
}

static BsReport b_pipeline(const SignPattern& s, uint64_t M) {
  const uint64_t m = s.period();
  std::vector<Progression> progs;
  const ExactRational kappa = make_rational(1, 2);  // bound h <= n/2
  for (uint32_t a : kIndexClasses) {
    for (uint32_t r : k_residues(a, s)) {
      for (const Progression& p : union_decomposition(a, r, 2 * m, kappa))
        progs.push_back(p);
    }
  }
  BsReport rep;
  rep.pattern = s.word();
  rep.modulus = M;
  rep.lambda = refine_and_merge(progs, M);
  ExactRational total;
  for (const auto& [rho, lam] : rep.lambda) {
    ExactRational c = density_constant(rho, M);
    rep.density.emplace(rho, c);
    total += c * lam * lam;
  }
  rep.B = ExactRational(3) * total;
  return rep;
}

BsReport B_constant(const SignPattern& s) {
  return b_pipeline(s, 12 * static_cast<uint64_t>(s.period()));
}

BsReport B_constant_at_modulus(const SignPattern& s, uint64_t M) {
  const uint64_t base = 12 * static_cast<uint64_t>(s.period());
  if (M % base)
    throw std::invalid_argument("B_constant_at_modulus: M must be a multiple of 12m");
  return b_pipeline(s, M);
}

std::map<std::string, ExactRational> table_reproduce(uint32_t max_period) {
  if (max_period == 0 || max_period > 8)
    throw std::invalid_argument("table_reproduce: 1 <= max_period <= 8 (desk-scale bound)");
  std::vector<std::string> words;
  for (uint32_t len = 1; len <= max_period; ++len) {
    for (uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::string w(len, '-');
      for (uint32_t i = 0; i < len; ++i) {
        if (bits & (1u << (len - 1 - i))) w[i] = '+';
      }
      words.push_back(std::move(w));
    }
  }
  std::vector<ExactRational> values(words.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < words.size(); ++i) {
    values[i] = B_constant(SignPattern(words[i])).B;
  }
  std::map<std::string, ExactRational> out;
  for (size_t i = 0; i < words.size(); ++i) out.emplace(words[i], values[i]);
  return out;
}

std::map<std::string, ExactRational> load_table_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_table_fixture: cannot open " + path);
  std::map<std::string, ExactRational> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const size_t comma = line.find(',');
    if (comma == std::string::npos || comma == 0)
      throw std::runtime_error("load_table_fixture: malformed row at line " + std::to_string(lineno));
    const std::string pattern = line.substr(0, comma);
    const std::string value = line.substr(comma + 1);
    const size_t slash = value.find('/');
    ExactRational q;
    try {
      if (slash == std::string::npos)
        q = ExactRational(BigInteger(value), 1);
      else
        q = ExactRational(BigInteger(value.substr(0, slash)), BigInteger(value.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("load_table_fixture: bad rational at line " + std::to_string(lineno));
    }
    q.canonicalize();
    SignPattern check(pattern);  // validates the word
    out.emplace(check.word(), q);
  }
  return out;
}

}  // namespace lucaslcm
