#include "treeact/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "treeact/errors.hpp"
#include "treeact/rep_family.hpp"
#include "treeact/tree.hpp"

namespace treeact {

namespace {

constexpr const char* kFrontierMagic = "treeact-frontier v1";

// Map node + string + four mpz headers; limbs accounted separately.
constexpr std::size_t kPerElementOverhead = 160;

std::size_t approx_bytes(const ProjectiveMatrix& m, const std::string& w) {
  std::size_t limbs = 0;
  for (const BigInt* e : {&m.m11, &m.m12, &m.m21, &m.m22})
    limbs += mpz_size(e->get_mpz_t());
  return kPerElementOverhead + limbs * sizeof(mp_limb_t) + w.size();
}

Letter letter_of(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::A;
    case 'b': return Letter::b;
    default: return Letter::B;
  }
}

bool valid_flat(const std::string& w) {
  for (char c : w)
    if (c != 'a' && c != 'A' && c != 'b' && c != 'B') return false;
  return true;
}

void expand_range(const std::vector<Element>& prev, const GeneratorSet& gens,
                  std::size_t begin, std::size_t end, std::vector<Element>& out) {
  static const char kLetters[] = "aAbB";
  for (std::size_t i = begin; i < end; ++i) {
    const Element& e = prev[i];
    const int last = e.word.empty() ? -1 : static_cast<int>(static_cast<std::uint8_t>(
                                               inverse(letter_of(e.word.back()))));
    for (int l = 0; l < 4; ++l) {
      if (l == last) continue;  // cancelling extension: element seen two layers ago
      Element next;
      next.matrix = mul(e.matrix, gens.img[l]);
      next.word = e.word + kLetters[l];
      out.push_back(std::move(next));
    }
  }
}

}  // namespace

GeneratorSet GeneratorSet::from_pair(const ProjectiveMatrix& a, const ProjectiveMatrix& b) {
  GeneratorSet g;
  g.img[0] = a;
  g.img[1] = inverse(a);
  g.img[2] = b;
  g.img[3] = inverse(b);
  return g;
}

GeneratorSet GeneratorSet::from_config(const SearchConfig& cfg) {
  if (cfg.generators) return from_pair(cfg.generators->first, cfg.generators->second);
  const RepFamily fam = make_family(cfg.t);
  return from_pair(fam.gen_a, fam.gen_b);
}

void expand_layer_serial(const std::vector<Element>& prev, const GeneratorSet& gens,
                         std::vector<Element>& out) {
  out.clear();
  out.reserve(prev.size() * 3 + 4);
  expand_range(prev, gens, 0, prev.size(), out);
}

void expand_layer_parallel(const std::vector<Element>& prev, const GeneratorSet& gens,
                           unsigned threads, std::vector<Element>& out) {
#ifdef _OPENMP
  const unsigned n = threads == 0 ? static_cast<unsigned>(omp_get_max_threads()) : threads;
  if (n <= 1 || prev.size() < 64) {
    expand_layer_serial(prev, gens, out);
    return;
  }
  std::vector<std::vector<Element>> parts(n);
#pragma omp parallel num_threads(n)
  {
    const unsigned tid = static_cast<unsigned>(omp_get_thread_num());
    const std::size_t chunk = (prev.size() + n - 1) / n;
    const std::size_t begin = std::min(prev.size(), tid * chunk);
    const std::size_t end = std::min(prev.size(), begin + chunk);
    parts[tid].reserve((end - begin) * 3);
    expand_range(prev, gens, begin, end, parts[tid]);
  }
  out.clear();
  out.reserve(prev.size() * 3 + 4);
  for (auto& part : parts)
    for (auto& e : part) out.push_back(std::move(e));
#else
  (void)threads;
  expand_layer_serial(prev, gens, out);
#endif
}

namespace {

struct LayerResult {
  std::vector<Element> entries;  // new elements of this layer, shortlex-sorted
};

using LayerHook = std::function<void(unsigned layer, const std::vector<Element>&)>;

// Core layered enumeration shared by both modes. Returns the frontier after
// `depth` completed layers; hook (when set) sees each layer's new elements.
Frontier run_layers(const SearchConfig& cfg, unsigned depth, const LayerHook& hook) {
  const GeneratorSet gens = GeneratorSet::from_config(cfg);
  Frontier f;
  std::vector<Element> current;
  std::size_t bytes = 0;

  if (cfg.resume_path) {
    f = load_frontier(*cfg.resume_path);
    for (const auto& [m, w] : f.elements) {
      bytes += approx_bytes(m, w);
      if (w.size() == f.layer) current.push_back({m, w});
    }
    std::sort(current.begin(), current.end(),
              [](const Element& x, const Element& y) { return flat_lex_less(x.word, y.word); });
  } else {
    f.elements.emplace(ProjectiveMatrix::identity(), std::string());
    current.push_back({ProjectiveMatrix::identity(), std::string()});
    bytes += approx_bytes(current.front().matrix, current.front().word);
  }

  std::vector<Element> candidates;
  for (unsigned layer = f.layer + 1; layer <= depth; ++layer) {
    if (cfg.threads == 1)
      expand_layer_serial(current, gens, candidates);
    else
      expand_layer_parallel(current, gens, cfg.threads, candidates);

    // Merge with the shortest-then-lex retention rule; the rule is a pure
    // min, so the result does not depend on candidate order (and hence not
    // on the thread count).
    std::vector<const ProjectiveMatrix*> fresh;
    for (Element& c : candidates) {
      auto [it, inserted] = f.elements.try_emplace(c.matrix, c.word);
      if (inserted) {
        bytes += approx_bytes(it->first, it->second);
        if (bytes > cfg.memory_budget)
          throw budget_exceeded_error(
              "memory budget exceeded after completing layer " +
                  std::to_string(layer - 1),
              layer - 1);
        fresh.push_back(&it->first);
      } else if (it->second.size() == c.word.size() && flat_lex_less(c.word, it->second)) {
        it->second = c.word;  // same layer, lexicographically better word
      }
    }

    current.clear();
    current.reserve(fresh.size());
    for (const ProjectiveMatrix* m : fresh) current.push_back({*m, f.elements.at(*m)});
    std::sort(current.begin(), current.end(),
              [](const Element& x, const Element& y) { return flat_lex_less(x.word, y.word); });

    f.layer = layer;
    if (cfg.persist_path) persist_frontier(f, *cfg.persist_path);
    if (hook) hook(layer, current);
  }
  return f;
}

bool qualifies(const WitnessRecord& r, bool emit_torsion) {
  if (r.matrix.is_identity()) return false;
  if (abs(r.det) != 1) return false;
  return emit_torsion || !r.order.finite;
}

}  // namespace

SearchStats bfs_search(const SearchConfig& cfg, const WitnessSink& sink) {
  if (cfg.max_length < 1) throw error("max_length must be >= 1");
  SearchStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  Frontier f = run_layers(cfg, cfg.max_length, [&](unsigned, const std::vector<Element>& layer) {
    for (const Element& e : layer) {
      WitnessRecord r = make_record(e.word, e.matrix);
      if (qualifies(r, cfg.emit_torsion)) {
        ++stats.witnesses;
        if (sink) sink(r);
      }
    }
  });
  stats.layers = f.layer;
  stats.elements = f.elements.size();
  stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return stats;
}

namespace {

struct PairKey {
  VertexKey k2, k3;
  bool operator==(const PairKey& o) const { return k2 == o.k2 && k3 == o.k3; }
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    VertexKeyHash h;
    return h(k.k2) * 0x9e3779b97f4a7c15ull ^ h(k.k3);
  }
};

}  // namespace

SearchStats mitm_search(const SearchConfig& cfg, const WitnessSink& sink) {
  if (cfg.max_length < 1) throw error("max_length must be >= 1");
  SearchStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  const unsigned half = (cfg.max_length + 1) / 2;

  Frontier f = run_layers(cfg, half, nullptr);

  static const PrimeContext two(2), three(3);
  using Entry = std::pair<const ProjectiveMatrix, std::string>;
  std::unordered_map<PairKey, std::vector<const Entry*>, PairKeyHash> buckets;
  for (const auto& kv : f.elements)
    buckets[{vertex_key(kv.first, two), vertex_key(kv.first, three)}].push_back(&kv);

  // Colliding g, h share both tree vertices, so g^-1 h fixes the base pair.
  // The minimal |word(g)| + |word(h)| over colliding pairs is exactly the
  // group length of g^-1 h (a geodesic splits at its midpoint into two
  // frontier elements), which gives the exact bfs length filter.
  struct Best {
    std::size_t len_sum;
    std::string word;
  };
  std::unordered_map<ProjectiveMatrix, Best, ProjectiveMatrixHash> best;
  for (const auto& [key, bucket] : buckets) {
    if (bucket.size() < 2) continue;
    for (const Entry* g : bucket) {
      const ProjectiveMatrix g_inv = inverse(g->first);
      const Word g_word_inv = invert_word(parse_word(g->second));
      for (const Entry* h : bucket) {
        if (g == h) continue;  // self-collision yields the identity
        const ProjectiveMatrix x = mul(g_inv, h->first);
        const std::size_t len_sum = g->second.size() + h->second.size();
        auto it = best.find(x);
        if (it != best.end() && it->second.len_sum < len_sum) continue;
        std::string word =
            format_word(free_reduce(concat(g_word_inv, parse_word(h->second))));
        if (it == best.end())
          best.emplace(x, Best{len_sum, std::move(word)});
        else if (len_sum < it->second.len_sum ||
                 (len_sum == it->second.len_sum && flat_lex_less(word, it->second.word)))
          it->second = Best{len_sum, std::move(word)};
      }
    }
  }

  std::vector<WitnessRecord> out;
  for (const auto& [m, b] : best) {
    if (b.len_sum > cfg.max_length) continue;  // shortest word longer than the bfs bound
    WitnessRecord r = make_record(b.word, m);
    if (qualifies(r, cfg.emit_torsion)) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const WitnessRecord& x, const WitnessRecord& y) {
    return flat_shortlex_less(x.word, y.word);
  });
  for (const WitnessRecord& r : out) {
    ++stats.witnesses;
    if (sink) sink(r);
  }

  stats.layers = f.layer;
  stats.elements = f.elements.size();
  stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return stats;
}

SearchStats run_search(const SearchConfig& cfg, const WitnessSink& sink) {
  return cfg.mode == SearchMode::bfs ? bfs_search(cfg, sink) : mitm_search(cfg, sink);
}

void persist_frontier(const Frontier& f, const std::filesystem::path& path) {
  std::vector<const std::pair<const ProjectiveMatrix, std::string>*> entries;
  entries.reserve(f.elements.size());
  for (const auto& kv : f.elements) entries.push_back(&kv);
  std::sort(entries.begin(), entries.end(),
            [](const auto* x, const auto* y) { return flat_shortlex_less(x->second, y->second); });

  std::ofstream os(path);
  if (!os) throw io_error("cannot open frontier file for writing: " + path.string());
  os << kFrontierMagic << "\n";
  os << "layer " << f.layer << "\n";
  os << "count " << f.elements.size() << "\n";
  for (const auto* e : entries) {
    const ProjectiveMatrix& m = e->first;
    os << m.m11 << ' ' << m.m12 << ' ' << m.m21 << ' ' << m.m22;
    if (!e->second.empty()) os << ' ' << e->second;
    os << "\n";
  }
  os.flush();
  if (!os) throw io_error("failed writing frontier file: " + path.string());
}

Frontier load_frontier(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw io_error("cannot open frontier file: " + path.string());
  std::string line;
  if (!std::getline(is, line)) throw frontier_corruption_error("empty frontier file");
  if (line != kFrontierMagic) {
    if (line.rfind("treeact-frontier ", 0) == 0)
      throw frontier_version_error("unsupported frontier version: " + line);
    throw frontier_corruption_error("not a frontier file");
  }

  Frontier f;
  std::size_t count = 0;
  {
    if (!std::getline(is, line)) throw frontier_corruption_error("missing layer header");
    std::istringstream hs(line);
    std::string tag;
    if (!(hs >> tag >> f.layer) || tag != "layer")
      throw frontier_corruption_error("malformed layer header: " + line);
  }
  {
    if (!std::getline(is, line)) throw frontier_corruption_error("missing count header");
    std::istringstream hs(line);
    std::string tag;
    if (!(hs >> tag >> count) || tag != "count")
      throw frontier_corruption_error("malformed count header: " + line);
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(is, line))
      throw frontier_corruption_error("truncated frontier file: expected " +
                                      std::to_string(count) + " entries, got " +
                                      std::to_string(i));
    std::istringstream es(line);
    std::string t11, t12, t21, t22, word;
    if (!(es >> t11 >> t12 >> t21 >> t22))
      throw frontier_corruption_error("malformed frontier entry: " + line);
    es >> word;  // absent for the identity element
    std::string extra;
    if (es >> extra) throw frontier_corruption_error("trailing fields in entry: " + line);
    BigInt a, b, c, d;
    if (a.set_str(t11, 10) != 0 || b.set_str(t12, 10) != 0 || c.set_str(t21, 10) != 0 ||
        d.set_str(t22, 10) != 0)
      throw frontier_corruption_error("non-numeric matrix entry: " + line);
    ProjectiveMatrix m;
    try {
      m = ProjectiveMatrix::from_integers(a, b, c, d);
    } catch (const singular_matrix_error&) {
      throw frontier_corruption_error("singular matrix in frontier: " + line);
    }
    if (m.m11 != a || m.m12 != b || m.m21 != c || m.m22 != d)
      throw frontier_corruption_error("non-canonical matrix in frontier: " + line);
    if (!valid_flat(word))
      throw frontier_corruption_error("invalid word letters in frontier: " + line);
    if (word.size() > f.layer)
      throw frontier_corruption_error("word longer than frontier layer: " + line);
    if (!f.elements.emplace(std::move(m), std::move(word)).second)
      throw frontier_corruption_error("duplicate element in frontier: " + line);
  }
  if (std::getline(is, line) && !line.empty())
    throw frontier_corruption_error("trailing data after frontier entries");
  return f;
}

}  // namespace treeact
