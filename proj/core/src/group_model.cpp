#include "sylow/group_model.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "sylow/errors.hpp"

namespace sylow {

BigInt ImprimitiveParams::order() const {
  return ipow(BigInt(m), n) * factorial(n) / p;
}

GroupType GroupType::imprimitive(std::uint64_t m, std::uint64_t p, std::uint64_t n) {
  if (m == 0 || p == 0 || n == 0) {
    throw InvalidArgument("G(m,p,n) needs positive m, p, n");
  }
  if (m % p != 0) {
    throw InvalidArgument("G(" + std::to_string(m) + "," + std::to_string(p) + "," +
                          std::to_string(n) + "): p must divide m");
  }
  if (n == 1) return GroupType(ImprimitiveParams{m / p, 1, 1});
  return GroupType(ImprimitiveParams{m, p, n});
}

GroupType GroupType::exceptional(unsigned shephard_todd) {
  if (shephard_todd < 4 || shephard_todd > 37) {
    throw InvalidArgument("exceptional Shephard-Todd index must be in 4..37, got " +
                          std::to_string(shephard_todd));
  }
  return GroupType(Exceptional{shephard_todd});
}

GroupType GroupType::product(std::vector<GroupType> factors) {
  std::vector<GroupType> flat;
  for (auto& f : factors) {
    if (f.is_product()) {
      for (const auto& inner : f.factors()) flat.push_back(inner);
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) throw InvalidArgument("empty product of groups");
  if (flat.size() == 1) return flat.front();
  return GroupType(std::move(flat));
}

GroupType GroupType::product_nontrivial(std::vector<GroupType> factors) {
  std::vector<GroupType> kept;
  for (auto& f : factors) {
    for (auto& c : f.components()) {
      if (!c.is_trivial()) kept.push_back(std::move(c));
    }
  }
  if (kept.empty()) return imprimitive(1, 1, 1);
  return product(std::move(kept));
}

GroupType::Kind GroupType::kind() const {
  return static_cast<Kind>(rep_.index());
}

bool GroupType::is_trivial() const {
  if (is_imprimitive()) {
    const auto& g = imprimitive_params();
    return g.m == 1 && g.n == 1;
  }
  if (is_product()) {
    return std::all_of(factors().begin(), factors().end(),
                       [](const GroupType& f) { return f.is_trivial(); });
  }
  return false;
}

const ImprimitiveParams& GroupType::imprimitive_params() const {
  if (!is_imprimitive()) throw InvalidArgument(to_string() + " is not of type G(m,p,n)");
  return std::get<ImprimitiveParams>(rep_);
}

unsigned GroupType::shephard_todd() const {
  if (!is_exceptional()) throw InvalidArgument(to_string() + " is not exceptional");
  return std::get<Exceptional>(rep_).st;
}

const std::vector<GroupType>& GroupType::factors() const {
  if (!is_product()) throw InvalidArgument(to_string() + " is not a product");
  return std::get<std::vector<GroupType>>(rep_);
}

std::vector<GroupType> GroupType::components() const {
  if (is_product()) return factors();
  return {*this};
}

BigInt GroupType::order() const {
  switch (kind()) {
    case Kind::Imprimitive:
      return imprimitive_params().order();
    case Kind::Exceptional:
      return exceptional_order(shephard_todd());
    case Kind::Product: {
      BigInt r = 1;
      for (const auto& f : factors()) r *= f.order();
      return r;
    }
  }
  return 1;
}

std::string GroupType::to_string() const {
  switch (kind()) {
    case Kind::Imprimitive: {
      const auto& g = imprimitive_params();
      return "G(" + std::to_string(g.m) + "," + std::to_string(g.p) + "," +
             std::to_string(g.n) + ")";
    }
    case Kind::Exceptional:
      return "G" + std::to_string(shephard_todd());
    case Kind::Product: {
      std::string out;
      const auto& fs = factors();
      for (std::size_t i = 0; i < fs.size();) {
        std::size_t j = i;
        while (j < fs.size() && fs[j] == fs[i]) ++j;
        if (!out.empty()) out += " × ";
        out += fs[i].to_string();
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
      }
      return out;
    }
  }
  return {};
}

std::strong_ordering operator<=>(const GroupType& a, const GroupType& b) {
  if (auto c = a.rep_.index() <=> b.rep_.index(); c != 0) return c;
  switch (a.kind()) {
    case GroupType::Kind::Imprimitive:
      return a.imprimitive_params() <=> b.imprimitive_params();
    case GroupType::Kind::Exceptional:
      return a.shephard_todd() <=> b.shephard_todd();
    case GroupType::Kind::Product:
      return std::lexicographical_compare_three_way(
          a.factors().begin(), a.factors().end(), b.factors().begin(), b.factors().end());
  }
  return std::strong_ordering::equal;
}

namespace {

struct ExceptionalInfo {
  std::uint64_t order;
  std::string_view name;
};

// Orders as tabulated for G4..G37 (|G| columns of the classification tables).
constexpr std::array<ExceptionalInfo, 34> kExceptional{{
    {24, "L2"},         {72, ""},        {48, ""},          {144, ""},
    {96, ""},           {192, ""},       {288, ""},         {576, ""},
    {48, ""},           {96, ""},        {144, ""},         {288, ""},
    {600, ""},          {1200, ""},      {1800, ""},        {3600, ""},
    {360, ""},          {720, ""},       {240, ""},         {120, "H3"},
    {336, "J3(4)"},     {648, "L3"},     {1296, "M3"},      {2160, "J3(5)"},
    {1152, "F4"},       {7680, "N4"},    {14400, "H4"},     {46080, "O4"},
    {155520, "L4"},     {51840, "K5"},   {39191040, "K6"},  {51840, "E6"},
    {2903040, "E7"},    {696729600, "E8"},
}};

}  // namespace

BigInt exceptional_order(unsigned shephard_todd) {
  if (shephard_todd < 4 || shephard_todd > 37) {
    throw InvalidArgument("no exceptional group G" + std::to_string(shephard_todd));
  }
  return kExceptional[shephard_todd - 4].order;
}

std::string_view exceptional_name(unsigned shephard_todd) {
  if (shephard_todd < 4 || shephard_todd > 37) return {};
  return kExceptional[shephard_todd - 4].name;
}

std::string FeasibleTriple::to_string() const {
  return "(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
}

std::strong_ordering triple_compare(const FeasibleTriple& a, const FeasibleTriple& b) {
  if (auto c = a.n <=> b.n; c != 0) return c;
  if (auto c = a.m <=> b.m; c != 0) return c;
  return a.p <=> b.p;
}

bool is_feasible(const FeasibleTriple& t, const ImprimitiveParams& ambient) {
  if (t.m == 0 || t.p == 0 || t.n == 0) return false;
  return t.n <= ambient.n && t.m % t.p == 0 && ambient.m % t.m == 0 &&
         (ambient.m / ambient.p) % (t.m / t.p) == 0;
}

namespace {

void sort_decreasing(std::vector<FeasibleTriple>& triples) {
  std::sort(triples.begin(), triples.end(), [](const auto& a, const auto& b) {
    return triple_compare(a, b) == std::strong_ordering::greater;
  });
}

}  // namespace

AugmentedPartition AugmentedPartition::make(std::vector<FeasibleTriple> triples,
                                            const ImprimitiveParams& ambient) {
  if (ambient.m % ambient.p != 0) throw InvalidArgument("ambient needs p | m");
  std::uint64_t total = 0;
  for (const auto& t : triples) {
    if (!is_feasible(t, ambient)) {
      throw InvalidArgument("triple " + t.to_string() + " is not feasible for G(" +
                            std::to_string(ambient.m) + "," + std::to_string(ambient.p) +
                            "," + std::to_string(ambient.n) + ")");
    }
    total += t.n;
  }
  if (total != ambient.n) {
    throw InvalidArgument("ranks of an augmented partition must sum to n");
  }
  sort_decreasing(triples);
  AugmentedPartition out;
  out.triples_ = std::move(triples);
  out.ambient_ = ambient;
  return out;
}

std::vector<FeasibleTriple> AugmentedPartition::normalized_triples() const {
  auto out = triples_;
  for (auto& t : out) {
    if (t.n == 1) t = FeasibleTriple{t.m / t.p, 1, 1};
  }
  sort_decreasing(out);
  return out;
}

std::string AugmentedPartition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    if (i > 0) out += ",";
    out += triples_[i].to_string();
  }
  return out + "]";
}

std::uint64_t alpha_class_count(const AugmentedPartition& delta) {
  const auto& g = delta.ambient();
  std::uint64_t d = g.p;
  for (const auto& t : delta.triples()) {
    d = std::gcd(d, t.n);
    d = std::gcd(d, g.m / t.m);
  }
  return std::gcd(d, g.m);
}

std::uint64_t conjugacy_modulus(const AugmentedPartition& delta) {
  return delta.ambient().m / alpha_class_count(delta);
}

SubgroupClassLabel SubgroupClassLabel::make(AugmentedPartition delta,
                                            std::uint64_t alpha_index) {
  if (alpha_index >= alpha_class_count(delta)) {
    throw InvalidArgument("twist index out of range for " + delta.to_string());
  }
  return SubgroupClassLabel{std::move(delta), alpha_index};
}

std::vector<std::uint64_t> degrees_imprimitive(std::uint64_t m, std::uint64_t p,
                                               std::uint64_t n) {
  if (m == 0 || p == 0 || n == 0 || m % p != 0) {
    throw InvalidArgument("degrees_imprimitive needs positive m, p, n with p | m");
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 1; i < n; ++i) out.push_back(i * m);
  out.push_back(n * m / p);
  if (m == 1) out.erase(out.begin());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sylow
