#include "comaxg/families.hpp"

#include <string>
#include <vector>

#include "comaxg/error.hpp"

namespace comaxg {

namespace {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t checked_power(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (result > SIZE_MAX / base) throw BadParameter("group order overflows");
    result *= base;
  }
  return result;
}

std::size_t mod_pow(std::size_t base, std::size_t exponent, std::size_t modulus) {
  std::size_t result = 1 % modulus;
  base %= modulus;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base % modulus;
    base = base * base % modulus;
    exponent >>= 1;
  }
  return result;
}

// <a, b | a^m = e, b^k = a^z, b^-1 a b = a^r>, elements b^s a^i stored at
// index s * m + i. The caller guarantees r^k = 1 and z r = z (mod m).
GroupTable metacyclic(std::size_t m, std::size_t k, std::size_t r, std::size_t z,
                      std::string label, std::string presentation) {
  const std::size_t n = m * k;
  std::vector<std::size_t> r_pow(k);
  for (std::size_t t = 0; t < k; ++t) r_pow[t] = mod_pow(r, t, m);
  std::vector<Element> table(n * n);
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t wrap = s + t >= k ? z : 0;
          const std::size_t b_part = (s + t) % k;
          const std::size_t a_part = (i * r_pow[t] + j + wrap) % m;
          table[(s * m + i) * n + (t * m + j)] = static_cast<Element>(b_part * m + a_part);
        }
      }
    }
  }
  return GroupTable::from_valid_table(n, std::move(table), std::move(label),
                                      std::move(presentation));
}

std::string parenthesize(const std::string& label) {
  return label.find(" x ") == std::string::npos ? label : "(" + label + ")";
}

void require_within_cap(std::size_t order, std::size_t cap) {
  if (order > cap) throw ClosureCapExceeded(cap);
}

}  // namespace

bool is_prime(std::size_t n) noexcept {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::GeneralizedQuaternion: return "quaternion";
    case Family::Semidihedral: return "semidihedral";
    case Family::ModularMaximalCyclic: return "modular";
    case Family::Abelian: return "abelian";
    case Family::Symmetric: return "symmetric";
    case Family::Alternating: return "alternating";
    case Family::ElementaryAbelian: return "elementary";
  }
  return "unknown";
}

GroupTable cyclic(std::size_t n) {
  if (n == 0) throw BadParameter("cyclic group order must be positive");
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  const std::string name = "Z" + std::to_string(n);
  return GroupTable::from_valid_table(n, std::move(table), name,
                                      "<a | a^" + std::to_string(n) + "=e>");
}

GroupTable dihedral(std::size_t order) {
  if (order < 4 || order % 2 != 0) {
    throw BadParameter("dihedral order must be even and at least 4, got " + std::to_string(order));
  }
  const std::size_t m = order / 2;
  return metacyclic(m, 2, m - 1, 0, "D" + std::to_string(order),
                    "<a,b | a^" + std::to_string(m) + "=b^2=e, bab=a^-1>");
}

GroupTable generalized_quaternion(std::size_t order) {
  if (order < 8 || !is_power_of_two(order)) {
    throw BadParameter("generalized quaternion order must be a power of 2 >= 8, got " +
                       std::to_string(order));
  }
  const std::size_t m = order / 2;
  return metacyclic(m, 2, m - 1, m / 2, "Q" + std::to_string(order),
                    "<a,b | a^" + std::to_string(m) + "=e, b^2=a^" + std::to_string(m / 2) +
                        ", b^-1ab=a^-1>");
}

GroupTable semidihedral(std::size_t order) {
  if (order < 16 || !is_power_of_two(order)) {
    throw BadParameter("semidihedral order must be a power of 2 >= 16, got " +
                       std::to_string(order));
  }
  const std::size_t m = order / 2;
  return metacyclic(m, 2, m / 2 - 1, 0, "SD" + std::to_string(order),
                    "<a,b | a^" + std::to_string(m) + "=b^2=e, bab=a^" +
                        std::to_string(m / 2 - 1) + ">");
}

GroupTable modular_maximal_cyclic(std::size_t p, std::size_t n) {
  if (!is_prime(p)) throw BadParameter("modular group needs a prime p, got " + std::to_string(p));
  if (n < 3) throw BadParameter("modular group needs n >= 3, got " + std::to_string(n));
  const std::size_t order = checked_power(p, n);
  const std::size_t m = order / p;
  const std::size_t r = 1 + m / p;
  return metacyclic(m, p, r, 0, "M" + std::to_string(order),
                    "<a,b | a^" + std::to_string(m) + "=b^" + std::to_string(p) +
                        "=e, b^-1ab=a^" + std::to_string(r) + ">");
}

GroupTable abelian(std::span<const std::size_t> factors) {
  if (factors.empty()) throw BadParameter("abelian group needs at least one factor");
  std::size_t n = 1;
  std::string label;
  for (std::size_t f : factors) {
    if (f == 0) throw BadParameter("abelian factor must be positive");
    if (n > SIZE_MAX / f) throw BadParameter("group order overflows");
    n *= f;
    if (!label.empty()) label += " x ";
    label += "Z" + std::to_string(f);
  }
  // Mixed radix: element index = sum digit_i * stride_i, last factor fastest.
  std::vector<std::size_t> stride(factors.size());
  std::size_t s = 1;
  for (std::size_t i = factors.size(); i-- > 0;) {
    stride[i] = s;
    s *= factors[i];
  }
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t c = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::size_t da = a / stride[i] % factors[i];
        const std::size_t db = b / stride[i] % factors[i];
        c += (da + db) % factors[i] * stride[i];
      }
      table[a * n + b] = static_cast<Element>(c);
    }
  }
  return GroupTable::from_valid_table(n, std::move(table), label);
}

GroupTable elementary_abelian(std::size_t p, std::size_t rank) {
  if (!is_prime(p)) throw BadParameter("elementary abelian group needs a prime, got " +
                                       std::to_string(p));
  if (rank == 0) throw BadParameter("elementary abelian rank must be positive");
  checked_power(p, rank);
  std::vector<std::size_t> factors(rank, p);
  GroupTable g = abelian(factors);
  g.relabel("Z" + std::to_string(p) + "^" + std::to_string(rank));
  return g;
}

GroupTable symmetric(std::size_t n) {
  if (n == 0) throw BadParameter("symmetric group degree must be positive");
  std::vector<Permutation> gens;
  if (n == 1) {
    gens.push_back(Permutation::identity(1));
  } else {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<std::uint32_t> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>(i);
    if (n > 2) gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  GroupTable g = from_permutation_generators(gens, SIZE_MAX);
  g.relabel("S" + std::to_string(n), g.presentation());
  return g;
}

GroupTable alternating(std::size_t n) {
  if (n == 0) throw BadParameter("alternating group degree must be positive");
  std::vector<Permutation> gens;
  if (n < 3) {
    gens.push_back(Permutation::identity(n));
  } else {
    for (std::uint32_t k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  }
  GroupTable g = from_permutation_generators(gens, SIZE_MAX);
  g.relabel("A" + std::to_string(n), g.presentation());
  return g;
}

GroupTable make_family(Family family, std::span<const std::size_t> params, const Limits& limits) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw BadParameter(std::string(to_string(family)) + " expects " + std::to_string(count) +
                         " parameter(s), got " + std::to_string(params.size()));
    }
  };
  const std::size_t cap = limits.closure_cap;
  switch (family) {
    case Family::Cyclic:
      need(1);
      require_within_cap(params[0], cap);
      return cyclic(params[0]);
    case Family::Dihedral:
      need(1);
      require_within_cap(params[0], cap);
      return dihedral(params[0]);
    case Family::GeneralizedQuaternion:
      need(1);
      require_within_cap(params[0], cap);
      return generalized_quaternion(params[0]);
    case Family::Semidihedral:
      need(1);
      require_within_cap(params[0], cap);
      return semidihedral(params[0]);
    case Family::ModularMaximalCyclic:
      need(2);
      if (!is_prime(params[0])) {
        throw BadParameter("modular group needs a prime p, got " + std::to_string(params[0]));
      }
      require_within_cap(checked_power(params[0], params[1]), cap);
      return modular_maximal_cyclic(params[0], params[1]);
    case Family::Abelian: {
      std::size_t n = 1;
      for (std::size_t f : params) {
        if (f == 0) throw BadParameter("abelian factor must be positive");
        if (n > cap / f) throw ClosureCapExceeded(cap);
        n *= f;
      }
      require_within_cap(n, cap);
      return abelian(params);
    }
    case Family::Symmetric: {
      need(1);
      std::size_t n = 1;
      for (std::size_t i = 2; i <= params[0]; ++i) {
        n *= i;
        require_within_cap(n, cap);
      }
      return symmetric(params[0]);
    }
    case Family::Alternating: {
      need(1);
      std::size_t n = 1;
      for (std::size_t i = 3; i <= params[0]; ++i) {
        n *= i;
        require_within_cap(n, cap);
      }
      return alternating(params[0]);
    }
    case Family::ElementaryAbelian:
      need(2);
      if (!is_prime(params[0])) {
        throw BadParameter("elementary abelian group needs a prime, got " +
                           std::to_string(params[0]));
      }
      require_within_cap(checked_power(params[0], params[1]), cap);
      return elementary_abelian(params[0], params[1]);
  }
  throw BadParameter("unknown family");
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h, std::size_t closure_cap) {
  const std::size_t a = g.order();
  const std::size_t b = h.order();
  if (b != 0 && a > closure_cap / b) throw ClosureCapExceeded(closure_cap);
  const std::size_t n = a * b;
  std::vector<Element> table(n * n);
  for (std::size_t g1 = 0; g1 < a; ++g1) {
    for (std::size_t h1 = 0; h1 < b; ++h1) {
      const std::size_t x = g1 * b + h1;
      for (std::size_t g2 = 0; g2 < a; ++g2) {
        const std::size_t gg = g.multiply(static_cast<Element>(g1), static_cast<Element>(g2));
        for (std::size_t h2 = 0; h2 < b; ++h2) {
          const std::size_t hh = h.multiply(static_cast<Element>(h1), static_cast<Element>(h2));
          table[x * n + g2 * b + h2] = static_cast<Element>(gg * b + hh);
        }
      }
    }
  }
  return GroupTable::from_valid_table(n, std::move(table),
                                      parenthesize(g.label()) + " x " + parenthesize(h.label()));
}

GroupTable semidirect_cyclic(std::size_t p, std::size_t q, std::size_t r) {
  if (!is_prime(p) || !is_prime(q)) {
    throw BadParameter("semidirect product needs primes, got p=" + std::to_string(p) +
                       ", q=" + std::to_string(q));
  }
  if (p == q) throw BadParameter("semidirect product needs distinct primes");
  if (r % p == 1 % p) {
    throw BadParameter("r = " + std::to_string(r) + " is 1 mod " + std::to_string(p));
  }
  if (mod_pow(r, q, p) != 1) {
    throw BadParameter("r^q = " + std::to_string(mod_pow(r, q, p)) + " mod " + std::to_string(p) +
                       ", not 1");
  }
  // (i, j) at index j * p + i; this is the metacyclic normal form b^j a^i
  // with b a b^-1 = a^r.
  const std::size_t n = p * q;
  std::vector<std::size_t> r_pow(q);
  for (std::size_t j = 0; j < q; ++j) r_pow[j] = mod_pow(r, j, p);
  std::vector<Element> table(n * n);
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t l = 0; l < q; ++l) {
        for (std::size_t k = 0; k < p; ++k) {
          const std::size_t ni = (i + k * r_pow[j]) % p;
          const std::size_t nj = (j + l) % q;
          table[(j * p + i) * n + (l * p + k)] = static_cast<Element>(nj * p + ni);
        }
      }
    }
  }
  const std::string rs = std::to_string(r);
  return GroupTable::from_valid_table(
      n, std::move(table),
      "Z" + std::to_string(p) + ":Z" + std::to_string(q) + "(r=" + rs + ")",
      "<a,b | a^" + std::to_string(p) + "=b^" + std::to_string(q) + "=e, bab^-1=a^" + rs + ">");
}

}  // namespace comaxg
