#include "multidesign/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "catalog_data.hpp"
#include "multidesign/bipartite.hpp"
#include "multidesign/design_io.hpp"
#include "multidesign/errors.hpp"
#include "multidesign/verifier.hpp"

namespace multidesign::catalog {

namespace {

constexpr std::pair<CatalogKind, std::string_view> kPrefixes[] = {
    {CatalogKind::Decomposition, "decomposition"},
    {CatalogKind::Packing, "packing"},
    {CatalogKind::Covering, "covering"},
    {CatalogKind::PureHexagonDecomposition, "hexagon"},
    {CatalogKind::PurePrismDecomposition, "prism"},
    {CatalogKind::BipartiteHexagonDecomposition, "bipartite"},
};

bool is_derived(CatalogKind kind) {
  return kind == CatalogKind::PureHexagonDecomposition || kind == CatalogKind::PurePrismDecomposition ||
         kind == CatalogKind::BipartiteHexagonDecomposition;
}

std::optional<std::uint32_t> parse_uint(std::string_view s) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

[[noreturn]] void data_error(const CatalogKey& key, const std::string& what) {
  throw std::logic_error("catalog entry " + to_string(key) + ": " + what);
}

void check(const CatalogKey& key, const Design& d) {
  const VerificationReport rep = verify_design(d, {.require_both_types = !is_derived(key.kind)});
  if (!rep.valid) data_error(key, "fails verification: " + rep.failures.front().message);
  switch (key.kind) {
    case CatalogKind::PureHexagonDecomposition:
    case CatalogKind::BipartiteHexagonDecomposition:
      if (rep.prism_count != 0) data_error(key, "contains a prism");
      break;
    case CatalogKind::PurePrismDecomposition:
      if (rep.hexagon_count != 0) data_error(key, "contains a hexagon");
      break;
    default:
      break;
  }
  const bool kind_ok = (key.kind == CatalogKind::Packing) == (d.kind == DesignKind::Packing) &&
                       (key.kind == CatalogKind::Covering) == (d.kind == DesignKind::Covering);
  if (!kind_ok) data_error(key, "stored kind is " + to_string(d.kind));
  if (key.kind == CatalogKind::BipartiteHexagonDecomposition) {
    std::vector<Vertex> left(key.m), right(key.n);
    for (Vertex i = 0; i < key.m; ++i) left[i] = i;
    for (Vertex i = 0; i < key.n; ++i) right[i] = key.m + i;
    if (!(d.host == Host::bipartite(left, right))) data_error(key, "unexpected host " + to_string(d.host));
  } else if (!(d.host == Host::complete(key.m))) {
    data_error(key, "unexpected host " + to_string(d.host));
  }
}

Design parse_entry(const CatalogKey& key, std::string_view text) {
  try {
    return parse_design_json(text);
  } catch (const ParseError& e) {
    data_error(key, e.what());
  }
}

// The covering of K_17 is stored as its explicit blocks only; the hexagon
// decomposition of the K_9 on {8..16} and of the K_{8,6} between {0..7} and
// {11..16} are added here.
void complete_covering_17(Design& d) {
  std::vector<Vertex> shift(9);
  for (Vertex v = 0; v < 9; ++v) shift[v] = v + 8;
  for (const Block& b : derived_base({CatalogKind::PureHexagonDecomposition, 9}).blocks) {
    d.blocks.push_back(relabel(b, shift));
  }
  BipartiteSpec spec;
  for (Vertex v = 0; v < 8; ++v) spec.left.push_back(v);
  for (Vertex v = 11; v < 17; ++v) spec.right.push_back(v);
  for (const Block& b : c6_decompose_bipartite(spec).blocks) d.blocks.push_back(b);
}

using Store = std::map<CatalogKey, Design>;

Store load(bool derived) {
  Store store;
  for (const auto& file : detail::embedded_files()) {
    const auto key = parse_key(file.stem);
    if (!key) throw std::logic_error("catalog file with unrecognized name: " + std::string(file.stem));
    if (is_derived(key->kind) != derived) continue;
    Design d = parse_entry(*key, file.text);
    if (key->kind == CatalogKind::Covering && key->m == 17) complete_covering_17(d);
    check(*key, d);
    store.emplace(*key, std::move(d));
  }
  if (!derived) {
    const CatalogKey k6{CatalogKind::Decomposition, 6};
    Design d = k6_multidecomposition();
    check(k6, d);
    store.emplace(k6, std::move(d));
  }
  return store;
}

// Separate stores: the explicit entries depend on the derived ones.
const Store& derived_store() {
  static const Store store = load(true);
  return store;
}

const Store& explicit_store() {
  static const Store store = load(false);
  return store;
}

}  // namespace

std::string to_string(const CatalogKey& key) {
  for (const auto& [kind, prefix] : kPrefixes) {
    if (kind != key.kind) continue;
    std::string out = std::string(prefix) + "-" + std::to_string(key.m);
    if (kind == CatalogKind::BipartiteHexagonDecomposition) out += "x" + std::to_string(key.n);
    return out;
  }
  return "?";
}

std::optional<CatalogKey> parse_key(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  const std::string_view prefix = text.substr(0, dash);
  const std::string_view rest = text.substr(dash + 1);
  for (const auto& [kind, name] : kPrefixes) {
    if (name != prefix) continue;
    CatalogKey key{kind, 0, 0};
    if (kind == CatalogKind::BipartiteHexagonDecomposition) {
      const auto x = rest.find('x');
      if (x == std::string_view::npos) return std::nullopt;
      const auto m = parse_uint(rest.substr(0, x));
      const auto n = parse_uint(rest.substr(x + 1));
      if (!m || !n) return std::nullopt;
      key.m = *m;
      key.n = *n;
    } else {
      const auto m = parse_uint(rest);
      if (!m) return std::nullopt;
      key.m = *m;
    }
    return key;
  }
  return std::nullopt;
}

Design get(const CatalogKey& key) {
  const Store& store = is_derived(key.kind) ? derived_store() : explicit_store();
  const auto it = store.find(key);
  if (it == store.end()) throw UnknownCatalogKey("no catalog entry " + to_string(key));
  return it->second;
}

Design k6_multidecomposition() {
  Design d;
  d.host = Host::complete(6);
  d.kind = DesignKind::Decomposition;
  d.blocks = {Block::hexagon({0, 1, 2, 3, 4, 5}), Block::prism({0, 2, 4}, {3, 5, 1})};
  return d;
}

Design derived_base(const CatalogKey& key) {
  if (!is_derived(key.kind)) throw UnknownCatalogKey(to_string(key) + " is not a derived ingredient");
  return get(key);
}

std::vector<CatalogKey> keys() {
  std::vector<CatalogKey> out;
  for (const auto& [key, d] : derived_store()) out.push_back(key);
  for (const auto& [key, d] : explicit_store()) out.push_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace multidesign::catalog
