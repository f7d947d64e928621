#include "comaxg/subgroup.hpp"

namespace comaxg {

namespace {

// Grows `bits`/`elements` (already a subgroup generated by gens[0..k)) to the
// subgroup generated by all of `gens` by closing under right multiplication.
void close_under(const GroupTable& group, Bitset& bits, std::vector<Element>& elements,
                 std::span<const Element> gens) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto row = group.row(elements[i]);
    for (Element g : gens) {
      const Element y = row[g];
      if (!bits.test(y)) {
        bits.set(y);
        elements.push_back(y);
      }
    }
  }
}

// Generates the subgroup spanned by `candidates`, adding only those
// candidates not already in the running closure.
SubgroupMask generate_greedy(const GroupTable& group, const Bitset& seed,
                             std::span<const Element> candidates) {
  Bitset bits(group.order());
  bits.set(GroupTable::identity());
  std::vector<Element> elements{GroupTable::identity()};
  std::vector<Element> gens;
  auto add = [&](Element x) {
    if (bits.test(x)) return;
    gens.push_back(x);
    close_under(group, bits, elements, gens);
  };
  seed.for_each([&](std::size_t x) { add(static_cast<Element>(x)); });
  for (Element x : candidates) add(x);
  return SubgroupMask(std::move(bits));
}

}  // namespace

std::vector<Element> SubgroupMask::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  bits_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

std::strong_ordering operator<=>(const SubgroupMask& a, const SubgroupMask& b) noexcept {
  if (a.order_ != b.order_) return a.order_ <=> b.order_;
  return a.bits_ <=> b.bits_;
}

SubgroupMask trivial_subgroup(const GroupTable& group) {
  Bitset bits(group.order());
  bits.set(GroupTable::identity());
  return SubgroupMask(std::move(bits));
}

SubgroupMask whole_group(const GroupTable& group) {
  Bitset bits(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) bits.set(i);
  return SubgroupMask(std::move(bits));
}

bool is_subgroup(const GroupTable& group, const Bitset& bits) {
  if (bits.size() != group.order() || !bits.test(GroupTable::identity())) return false;
  const auto members = bits.indices();
  for (std::size_t a : members) {
    if (!bits.test(group.inverse(static_cast<Element>(a)))) return false;
    const auto row = group.row(static_cast<Element>(a));
    for (std::size_t b : members) {
      if (!bits.test(row[b])) return false;
    }
  }
  return true;
}

SubgroupMask generated_subgroup(const GroupTable& group, std::span<const Element> generators) {
  return generate_greedy(group, Bitset(group.order()), generators);
}

SubgroupMask cyclic_subgroup(const GroupTable& group, Element x) {
  Bitset bits(group.order());
  Element y = GroupTable::identity();
  do {
    bits.set(y);
    y = group.multiply(y, x);
  } while (y != GroupTable::identity());
  return SubgroupMask(std::move(bits));
}

SubgroupMask meet(const SubgroupMask& h, const SubgroupMask& k) {
  return SubgroupMask(h.bits() & k.bits());
}

SubgroupMask join(const GroupTable& group, const SubgroupMask& h, const SubgroupMask& k) {
  if (k.is_subgroup_of(h)) return h;
  if (h.is_subgroup_of(k)) return k;
  const auto extra = k.elements();
  return generate_greedy(group, h.bits(), extra);
}

std::size_t product_order(const SubgroupMask& h, const SubgroupMask& k) {
  const std::size_t common = h.bits().intersection_count(k.bits());
  return h.order() * k.order() / common;
}

bool is_normal(const GroupTable& group, const SubgroupMask& h) {
  const auto members = h.elements();
  for (Element g = 0; g < group.order(); ++g) {
    const Element g_inv = group.inverse(g);
    for (Element x : members) {
      if (!h.contains(group.multiply(group.multiply(g, x), g_inv))) return false;
    }
  }
  return true;
}

bool is_abelian(const GroupTable& group, const SubgroupMask& h) {
  const auto members = h.elements();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (group.multiply(members[i], members[j]) != group.multiply(members[j], members[i])) {
        return false;
      }
    }
  }
  return true;
}

bool is_cyclic(const GroupTable& group, const SubgroupMask& h) {
  bool found = false;
  h.bits().for_each([&](std::size_t x) {
    if (group.element_order(static_cast<Element>(x)) == h.order()) found = true;
  });
  return found;
}

bool is_elementary_abelian(const GroupTable& group, const SubgroupMask& h) {
  std::uint32_t prime = 0;
  bool uniform = true;
  h.bits().for_each([&](std::size_t x) {
    if (x == GroupTable::identity()) return;
    const std::uint32_t o = group.element_order(static_cast<Element>(x));
    if (prime == 0) prime = o;
    if (o != prime) uniform = false;
  });
  if (!uniform) return false;
  if (prime != 0) {
    for (std::uint32_t d = 2; d * d <= prime; ++d) {
      if (prime % d == 0) return false;
    }
  }
  return is_abelian(group, h);
}

SubgroupMask commutator_subgroup(const GroupTable& group, const SubgroupMask& h) {
  const auto members = h.elements();
  Bitset commutators(group.order());
  for (Element x : members) {
    const Element x_inv = group.inverse(x);
    for (Element y : members) {
      const Element c =
          group.multiply(group.multiply(x_inv, group.inverse(y)), group.multiply(x, y));
      commutators.set(c);
    }
  }
  return generate_greedy(group, commutators, {});
}

std::vector<SubgroupMask> derived_series(const GroupTable& group) {
  std::vector<SubgroupMask> series{whole_group(group)};
  while (series.back().order() > 1) {
    SubgroupMask next = commutator_subgroup(group, series.back());
    const bool stable = next == series.back();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

}  // namespace comaxg
