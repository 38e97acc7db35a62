#include "chainsemi/families.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "chainsemi/parallel.hpp"

namespace chainsemi {

std::string family_name(Family f) {
  switch (f) {
    case Family::P: return "p";
    case Family::CP: return "cp";
    case Family::OCP: return "ocp";
    case Family::ORCP: return "orcp";
    case Family::CT: return "ct";
    case Family::OCT: return "oct";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::optional<Family> family_parent(Family f) {
  switch (f) {
    case Family::P: return std::nullopt;
    case Family::CP: return Family::P;
    case Family::OCP: return Family::ORCP;
    case Family::ORCP: return Family::CP;
    case Family::CT: return Family::CP;
    case Family::OCT: return Family::CT;
  }
  return std::nullopt;
}

bool member(Family f, const PartialMap& m) {
  if (f == Family::P) return true;
  const PropertySet p = classify(m);
  switch (f) {
    case Family::CP: return p.contraction;
    case Family::OCP: return p.contraction && p.order_preserving;
    case Family::ORCP: return p.contraction && (p.order_preserving || p.order_reversing);
    case Family::CT: return p.contraction && p.full;
    case Family::OCT: return p.contraction && p.full && p.order_preserving;
    default: return true;
  }
}

std::size_t ElementSet::position_of(map_id id) const {
  auto it = index.find(id);
  if (it == index.end()) {
    throw Error(errc::not_member, "id " + std::to_string(id) + " not in " +
                                      family_name(family) + "_" + std::to_string(n));
  }
  return it->second;
}

std::vector<map_id> ElementSet::ids() const {
  std::vector<map_id> out;
  out.reserve(elements.size());
  for (const auto& m : elements) out.push_back(canonical_id(m));
  return out;
}

ElementSet element_set_from_ids(Family f, int n, const std::vector<map_id>& ids) {
  ElementSet set{f, n, {}, {}};
  set.elements.reserve(ids.size());
  for (map_id id : ids) {
    set.index.emplace(id, set.elements.size());
    set.elements.push_back(decode(n, id));
  }
  return set;
}

ElementSet enumerate_family(Family f, int n, const EnumerationOptions& opts) {
  if (n < 1) throw Error(errc::out_of_range, "chain size must be positive");
  if (n > opts.max_n) {
    throw Error(errc::budget_exceeded,
                "enumeration of " + family_name(f) + "_" + std::to_string(n) +
                    " exceeds max_n=" + std::to_string(opts.max_n));
  }
  if (opts.cache_dir) {
    const auto file = cache_file_path(*opts.cache_dir, f, n);
    if (std::filesystem::exists(file)) {
      return element_set_from_ids(f, n, read_element_cache(file, f, n));
    }
  }

  const map_id total = map_space_size(n);
  std::vector<char> keep(total, 0);
  parallel_chunks(total, opts.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t id = begin; id < end; ++id) {
      if (member(f, decode(n, static_cast<map_id>(id)))) keep[id] = 1;
    }
  });
  std::vector<map_id> ids;
  for (map_id id = 0; id < total; ++id) {
    if (keep[id]) ids.push_back(id);
  }

  if (opts.cache_dir) {
    std::filesystem::create_directories(*opts.cache_dir);
    write_element_cache(cache_file_path(*opts.cache_dir, f, n), f, n, ids);
  }
  return element_set_from_ids(f, n, ids);
}

ClosureResult verify_closure(const ElementSet& set, int threads) {
  const std::size_t count = set.size();
  // Per row i, record the first violating j; the first violating row wins,
  // so the reported pair is the lexicographically least and the result is
  // deterministic regardless of thread count.
  std::vector<std::size_t> first_bad(count, count);
  parallel_chunks(count, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        if (!member(set.family, compose(set.elements[i], set.elements[j]))) {
          first_bad[i] = j;
          break;
        }
      }
    }
  });
  for (std::size_t i = 0; i < count; ++i) {
    if (first_bad[i] < count) {
      return ClosureResult{false,
                           std::make_pair(canonical_id(set.elements[i]),
                                          canonical_id(set.elements[first_bad[i]]))};
    }
  }
  return ClosureResult{true, std::nullopt};
}

// --- cache ---

namespace {

constexpr char kMagic[8] = {'C', 'S', 'E', 'M', 'I', '0', '0', '1'};

void put_u64_le(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64_le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

std::filesystem::path cache_file_path(const std::filesystem::path& dir, Family f, int n) {
  return dir / (family_name(f) + "_" + std::to_string(n) + ".csemi");
}

void write_element_cache(const std::filesystem::path& file, Family f, int n,
                         const std::vector<map_id>& ids) {
  std::string buf;
  buf.append(kMagic, sizeof(kMagic));
  buf.push_back(static_cast<char>(f));
  buf.push_back(static_cast<char>(n));
  put_u64_le(buf, ids.size());
  for (map_id id : ids) put_u64_le(buf, id);

  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(buf.data(), static_cast<std::streamsize>(buf.size()))) {
    throw Error(errc::io_error, "cannot write " + file.string());
  }
}

std::vector<map_id> read_element_cache(const std::filesystem::path& file, Family f, int n) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(errc::io_error, "cannot open " + file.string());
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < sizeof(kMagic) + 2 + 8 ||
      std::memcmp(buf.data(), kMagic, sizeof(kMagic)) != 0) {
    throw Error(errc::io_error, "bad cache header in " + file.string());
  }
  const auto* p = reinterpret_cast<const unsigned char*>(buf.data());
  const auto tag = static_cast<Family>(p[8]);
  const int file_n = static_cast<int>(p[9]);
  if (tag != f || file_n != n) {
    throw Error(errc::io_error, "cache file " + file.string() + " is labelled " +
                                    family_name(tag) + "_" + std::to_string(file_n));
  }
  const std::uint64_t count = get_u64_le(p + 10);
  if (buf.size() != sizeof(kMagic) + 2 + 8 + 8 * count) {
    throw Error(errc::io_error, "truncated cache file " + file.string());
  }
  std::vector<map_id> ids;
  ids.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    ids.push_back(get_u64_le(p + 18 + 8 * i));
  }
  return ids;
}

}  // namespace chainsemi
