#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "comaxg/group.hpp"
#include "comaxg/limits.hpp"

namespace comaxg {

enum class Family {
  Cyclic,
  Dihedral,
  GeneralizedQuaternion,
  Semidihedral,
  ModularMaximalCyclic,
  Abelian,
  Symmetric,
  Alternating,
  ElementaryAbelian,
};

std::string_view to_string(Family family);

// Family constructors. Orders are group orders, not the index n of the
// presentation: dihedral(8) is the symmetry group of the square.

GroupTable cyclic(std::size_t n);
/// Order 2n with n >= 2; <a,b | a^n = b^2 = e, bab = a^-1>.
GroupTable dihedral(std::size_t order);
/// Order 2^n with n >= 3; <a,b | a^(2^(n-1)) = e, b^2 = a^(2^(n-2)), b^-1 a b = a^-1>.
GroupTable generalized_quaternion(std::size_t order);
/// Order 2^n with n >= 4; <a,b | a^(2^(n-1)) = b^2 = e, bab = a^(-1+2^(n-2))>.
GroupTable semidihedral(std::size_t order);
/// M_{p^n} with n >= 3; <a,b | a^(p^(n-1)) = b^p = e, b^-1 a b = a^(1+p^(n-2))>.
GroupTable modular_maximal_cyclic(std::size_t p, std::size_t n);
/// Direct product of cyclic groups with the given orders.
GroupTable abelian(std::span<const std::size_t> factors);
GroupTable elementary_abelian(std::size_t p, std::size_t rank);
GroupTable symmetric(std::size_t n);
GroupTable alternating(std::size_t n);

/// Dispatches on `family`. Parameters:
///   Cyclic {n}; Dihedral {order}; GeneralizedQuaternion {order};
///   Semidihedral {order}; ModularMaximalCyclic {p, n}; Abelian {factors...};
///   Symmetric {n}; Alternating {n}; ElementaryAbelian {p, rank}.
/// Throws BadParameter for out-of-range parameters and ClosureCapExceeded
/// when the resulting order exceeds limits.closure_cap.
GroupTable make_family(Family family, std::span<const std::size_t> params,
                       const Limits& limits = {});

/// Componentwise product; element (g, h) has index g * |H| + h.
GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                          std::size_t closure_cap = Limits{}.closure_cap);

/// Z_p x| Z_q on pairs (i mod p, j mod q) with
/// (i, j) * (k, l) = (i + k r^j mod p, j + l mod q).
/// Requires distinct primes p, q, r != 1 (mod p) and r^q = 1 (mod p).
GroupTable semidirect_cyclic(std::size_t p, std::size_t q, std::size_t r);

bool is_prime(std::size_t n) noexcept;

}  // namespace comaxg
