#include "chainsemi/green_star.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "chainsemi/parallel.hpp"

namespace chainsemi {

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::L: return "l";
    case Relation::R: return "r";
    case Relation::H: return "h";
    case Relation::D: return "d";
    case Relation::Lstar: return "lstar";
    case Relation::Rstar: return "rstar";
    case Relation::Hstar: return "hstar";
    case Relation::Dstar: return "dstar";
    case Relation::Jstar: return "jstar";
  }
  return "?";
}

std::optional<Relation> relation_from_name(const std::string& name) {
  for (Relation r : {Relation::L, Relation::R, Relation::H, Relation::D,
                     Relation::Lstar, Relation::Rstar, Relation::Hstar,
                     Relation::Dstar, Relation::Jstar}) {
    if (relation_name(r) == name) return r;
  }
  return std::nullopt;
}

namespace {

RelationClasses canonicalize(Family family, int n, Relation rel, Method method,
                             std::vector<std::vector<std::size_t>> classes,
                             std::size_t count) {
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<std::size_t> class_of(count, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t pos : classes[c]) class_of[pos] = c;
  }
  return RelationClasses{family, n, rel, method, std::move(classes), std::move(class_of)};
}

RelationClasses group_by_key(const ElementSet& set, Relation rel, Method method,
                             const std::vector<std::string>& keys) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i) groups[keys[i]].push_back(i);
  std::vector<std::vector<std::size_t>> classes;
  classes.reserve(groups.size());
  for (auto& [key, members] : groups) classes.push_back(std::move(members));
  return canonicalize(set.family, set.n, rel, method, std::move(classes), set.size());
}

std::string image_key(const PartialMap& m) {
  std::ostringstream os;
  for (point_type v : m.image()) os << v << ",";
  return os.str();
}

// Encodes dom(m) together with the kernel relation on it: position i holds
// the least point with the same image value, or 0 when undefined.
std::string kernel_key(const PartialMap& m) {
  std::ostringstream os;
  for (point_type i = 1; i <= m.chain_size(); ++i) {
    point_type least = 0;
    if (m.defined(i)) {
      for (point_type j = 1; j <= i; ++j) {
        if (m.defined(j) && m.value(j) == m.value(i)) {
          least = j;
          break;
        }
      }
    }
    os << least << ",";
  }
  return os.str();
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t count) : parent(count) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

RelationClasses join_of(const ElementSet& set, Relation rel, Method method,
                        const RelationClasses& first, const RelationClasses& second) {
  UnionFind uf(set.size());
  for (const auto& cls : first.classes) {
    for (std::size_t i = 1; i < cls.size(); ++i) uf.unite(cls[0], cls[i]);
  }
  for (const auto& cls : second.classes) {
    for (std::size_t i = 1; i < cls.size(); ++i) uf.unite(cls[0], cls[i]);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < set.size(); ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> classes;
  for (auto& [root, members] : groups) classes.push_back(std::move(members));
  return canonicalize(set.family, set.n, rel, method, std::move(classes), set.size());
}

RelationClasses intersection_of(const ElementSet& set, Relation rel, Method method,
                                const RelationClasses& first,
                                const RelationClasses& second) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < set.size(); ++i) {
    groups[{first.class_of[i], second.class_of[i]}].push_back(i);
  }
  std::vector<std::vector<std::size_t>> classes;
  for (auto& [key, members] : groups) classes.push_back(std::move(members));
  return canonicalize(set.family, set.n, rel, method, std::move(classes), set.size());
}

}  // namespace

RelationClasses classes_from_keys(const ElementSet& set, Relation rel, Method method,
                                  const std::vector<std::string>& keys) {
  return group_by_key(set, rel, method, keys);
}

CayleyTable build_cayley_table(const ElementSet& set, int threads) {
  CayleyTable table;
  table.count = set.size();
  table.products.assign(table.count * table.count, 0);
  parallel_chunks(table.count, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < table.count; ++j) {
        const map_id id = canonical_id(compose(set.elements[i], set.elements[j]));
        auto it = set.index.find(id);
        if (it == set.index.end()) {
          throw Error(errc::not_member,
                      "product " + std::to_string(id) + " escapes " +
                          family_name(set.family) + "_" + std::to_string(set.n) +
                          " (closure violation)");
        }
        table.products[i * table.count + j] = static_cast<std::uint32_t>(it->second);
      }
    }
  });
  return table;
}

TranslationFingerprint right_translation_fingerprint(const CayleyTable& table,
                                                     std::size_t element) {
  TranslationFingerprint fp;
  fp.coloring.assign(table.count, 0);
  std::map<std::uint32_t, std::uint32_t> first_seen;
  for (std::size_t x = 0; x < table.count; ++x) {
    const auto prod = static_cast<std::uint32_t>(table.product(element, x));
    auto [it, inserted] = first_seen.emplace(prod, static_cast<std::uint32_t>(x));
    fp.coloring[x] = it->second;
  }
  return fp;
}

TranslationFingerprint left_translation_fingerprint(const CayleyTable& table,
                                                    std::size_t element) {
  TranslationFingerprint fp;
  fp.coloring.assign(table.count, 0);
  std::map<std::uint32_t, std::uint32_t> first_seen;
  for (std::size_t x = 0; x < table.count; ++x) {
    const auto prod = static_cast<std::uint32_t>(table.product(x, element));
    auto [it, inserted] = first_seen.emplace(prod, static_cast<std::uint32_t>(x));
    fp.coloring[x] = it->second;
  }
  return fp;
}

RelationClasses classic_classes(const ElementSet& set, Relation rel) {
  std::vector<std::string> keys(set.size());
  switch (rel) {
    case Relation::L:
      for (std::size_t i = 0; i < set.size(); ++i) keys[i] = image_key(set.elements[i]);
      return group_by_key(set, rel, Method::characterization, keys);
    case Relation::R:
      for (std::size_t i = 0; i < set.size(); ++i) keys[i] = kernel_key(set.elements[i]);
      return group_by_key(set, rel, Method::characterization, keys);
    case Relation::H: {
      const auto l = classic_classes(set, Relation::L);
      const auto r = classic_classes(set, Relation::R);
      return intersection_of(set, rel, Method::characterization, l, r);
    }
    case Relation::D: {
      const auto l = classic_classes(set, Relation::L);
      const auto r = classic_classes(set, Relation::R);
      return join_of(set, rel, Method::characterization, l, r);
    }
    default:
      throw Error(errc::family_unsupported,
                  "classic_classes handles l, r, h, d; got " + relation_name(rel));
  }
}

namespace {

RelationClasses star_fingerprint_classes(const ElementSet& set, Relation rel,
                                         const CayleyTable& table, bool right,
                                         int threads) {
  std::vector<TranslationFingerprint> fps(set.size());
  parallel_chunks(set.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      fps[i] = right ? right_translation_fingerprint(table, i)
                     : left_translation_fingerprint(table, i);
    }
  });
  std::map<TranslationFingerprint, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < set.size(); ++i) groups[fps[i]].push_back(i);
  std::vector<std::vector<std::size_t>> classes;
  for (auto& [fp, members] : groups) classes.push_back(std::move(members));
  return canonicalize(set.family, set.n, rel, Method::oracle, std::move(classes),
                      set.size());
}

void check_monoid(const ElementSet& set) {
  // The oracle quantifies over the monoid completion; every enumerated
  // family here already contains the identity, so S^1 = S.
  if (!set.contains(canonical_id(identity(set.n)))) {
    throw Error(errc::not_member, "element set lacks the identity map");
  }
}

}  // namespace

RelationClasses star_classes_oracle(const ElementSet& set, Relation rel,
                                    const StarOptions& opts) {
  if (set.n > opts.max_oracle_n) {
    throw Error(errc::budget_exceeded,
                "oracle on n=" + std::to_string(set.n) +
                    " exceeds max_oracle_n=" + std::to_string(opts.max_oracle_n));
  }
  check_monoid(set);
  const CayleyTable table = build_cayley_table(set, opts.threads);
  switch (rel) {
    case Relation::Lstar:
      return star_fingerprint_classes(set, rel, table, /*right=*/true, opts.threads);
    case Relation::Rstar:
      return star_fingerprint_classes(set, rel, table, /*right=*/false, opts.threads);
    case Relation::Hstar: {
      auto l = star_fingerprint_classes(set, Relation::Lstar, table, true, opts.threads);
      auto r = star_fingerprint_classes(set, Relation::Rstar, table, false, opts.threads);
      return intersection_of(set, rel, Method::oracle, l, r);
    }
    case Relation::Dstar: {
      auto l = star_fingerprint_classes(set, Relation::Lstar, table, true, opts.threads);
      auto r = star_fingerprint_classes(set, Relation::Rstar, table, false, opts.threads);
      return join_of(set, rel, Method::oracle, l, r);
    }
    default:
      throw Error(errc::family_unsupported,
                  "star oracle handles lstar, rstar, hstar, dstar; got " +
                      relation_name(rel));
  }
}

RelationClasses star_classes_char(const ElementSet& set, Relation rel) {
  if (set.family != Family::CP && set.family != Family::OCP &&
      set.family != Family::ORCP) {
    throw Error(errc::family_unsupported,
                "characterizations cover cp, ocp, orcp; got " + family_name(set.family));
  }
  std::vector<std::string> keys(set.size());
  switch (rel) {
    case Relation::Lstar:
      for (std::size_t i = 0; i < set.size(); ++i) keys[i] = image_key(set.elements[i]);
      return group_by_key(set, rel, Method::characterization, keys);
    case Relation::Rstar:
      for (std::size_t i = 0; i < set.size(); ++i) keys[i] = kernel_key(set.elements[i]);
      return group_by_key(set, rel, Method::characterization, keys);
    case Relation::Hstar:
      for (std::size_t i = 0; i < set.size(); ++i) {
        keys[i] = image_key(set.elements[i]) + "|" + kernel_key(set.elements[i]);
      }
      return group_by_key(set, rel, Method::characterization, keys);
    case Relation::Dstar:
      for (std::size_t i = 0; i < set.size(); ++i) {
        keys[i] = std::to_string(set.elements[i].height());
      }
      return group_by_key(set, rel, Method::characterization, keys);
    default:
      throw Error(errc::family_unsupported,
                  "characterizations handle lstar, rstar, hstar, dstar; got " +
                      relation_name(rel));
  }
}

std::vector<std::size_t> principal_star_ideal(const ElementSet& set,
                                              const CayleyTable& table,
                                              const RelationClasses& dstar,
                                              std::size_t position) {
  // Least fixpoint: start from the element's D*-class and keep adjoining
  // the D*-classes of all two-sided products xby. Every member of a newly
  // added class is processed (each class once).
  std::vector<char> in_ideal(dstar.size(), 0);
  std::vector<std::size_t> work;
  in_ideal[dstar.class_of[position]] = 1;
  work.push_back(dstar.class_of[position]);
  while (!work.empty()) {
    const std::size_t cls = work.back();
    work.pop_back();
    for (std::size_t b : dstar.classes[cls]) {
      for (std::size_t x = 0; x < set.size(); ++x) {
        const std::size_t xb = table.product(x, b);
        for (std::size_t y = 0; y < set.size(); ++y) {
          const std::size_t target = dstar.class_of[table.product(xb, y)];
          if (!in_ideal[target]) {
            in_ideal[target] = 1;
            work.push_back(target);
          }
        }
      }
    }
  }
  std::vector<std::size_t> members;
  for (std::size_t c = 0; c < dstar.size(); ++c) {
    if (in_ideal[c]) {
      members.insert(members.end(), dstar.classes[c].begin(), dstar.classes[c].end());
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::size_t> principal_star_ideal_by_saturation(
    const ElementSet& set, const CayleyTable& table, const RelationClasses& lstar,
    const RelationClasses& rstar, std::size_t position) {
  std::vector<char> in_ideal(set.size(), 0);
  std::vector<std::size_t> work;
  auto add = [&](std::size_t element) {
    if (!in_ideal[element]) {
      in_ideal[element] = 1;
      work.push_back(element);
    }
  };
  add(position);
  while (!work.empty()) {
    const std::size_t b = work.back();
    work.pop_back();
    for (std::size_t other : lstar.classes[lstar.class_of[b]]) add(other);
    for (std::size_t other : rstar.classes[rstar.class_of[b]]) add(other);
    for (std::size_t x = 0; x < set.size(); ++x) {
      add(table.product(x, b));
      add(table.product(b, x));
      const std::size_t xb = table.product(x, b);
      for (std::size_t y = 0; y < set.size(); ++y) add(table.product(xb, y));
    }
  }
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (in_ideal[i]) members.push_back(i);
  }
  return members;
}

RelationClasses jstar_classes(const ElementSet& set, const StarOptions& opts) {
  if (set.n > opts.max_jstar_n) {
    throw Error(errc::budget_exceeded,
                "jstar on n=" + std::to_string(set.n) +
                    " exceeds max_jstar_n=" + std::to_string(opts.max_jstar_n));
  }
  const RelationClasses dstar = star_classes_oracle(set, Relation::Dstar, opts);
  const CayleyTable table = build_cayley_table(set, opts.threads);

  // Principal *-ideals are constant on D*-classes, so compute one per class
  // and group the classes by ideal equality.
  std::vector<std::vector<std::size_t>> ideals(dstar.size());
  for (std::size_t c = 0; c < dstar.size(); ++c) {
    ideals[c] = principal_star_ideal(set, table, dstar, dstar.classes[c].front());
  }
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < dstar.size(); ++c) groups[ideals[c]].push_back(c);

  std::vector<std::vector<std::size_t>> classes;
  for (auto& [ideal, class_indices] : groups) {
    std::vector<std::size_t> merged;
    for (std::size_t c : class_indices) {
      merged.insert(merged.end(), dstar.classes[c].begin(), dstar.classes[c].end());
    }
    classes.push_back(std::move(merged));
  }
  return canonicalize(set.family, set.n, Relation::Jstar, Method::oracle,
                      std::move(classes), set.size());
}

std::vector<bool> classes_with_idempotent(const ElementSet& set,
                                          const RelationClasses& classes) {
  std::vector<bool> out(classes.size(), false);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t pos : classes.classes[c]) {
      if (is_idempotent_via_fixpoints(set.elements[pos])) {
        out[c] = true;
        break;
      }
    }
  }
  return out;
}

AbundanceVerdict abundance(const ElementSet& set, Side side, Method method,
                           const StarOptions& opts) {
  const Relation rel = side == Side::left ? Relation::Lstar : Relation::Rstar;
  const RelationClasses classes = method == Method::oracle
                                      ? star_classes_oracle(set, rel, opts)
                                      : star_classes_char(set, rel);
  AbundanceVerdict verdict;
  verdict.side = side;
  const auto has_idem = classes_with_idempotent(set, classes);
  verdict.class_has_idempotent.assign(has_idem.begin(), has_idem.end());
  verdict.abundant = true;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!has_idem[c]) {
      verdict.abundant = false;
      std::vector<map_id> witness;
      for (std::size_t pos : classes.classes[c]) {
        witness.push_back(canonical_id(set.elements[pos]));
      }
      verdict.witness_class = std::move(witness);
      break;
    }
  }
  return verdict;
}

}  // namespace chainsemi
