#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treeact/projmat.hpp"
#include "treeact/witness.hpp"

namespace treeact {

enum class SearchMode { bfs, mitm };

struct SearchConfig {
  unsigned max_length = 1;
  SearchMode mode = SearchMode::bfs;
  BigRational t = 9;  // family parameter; ignored when generators are given
  std::optional<std::pair<ProjectiveMatrix, ProjectiveMatrix>> generators;
  std::size_t memory_budget = std::size_t(4) << 30;
  std::optional<std::filesystem::path> persist_path;
  std::optional<std::filesystem::path> resume_path;
  bool emit_torsion = false;
  unsigned threads = 0;  // 0 = all hardware threads; 1 = serial reference path
};

/// One enumerated group element: its canonical matrix and the
/// shortest-then-lexicographically-least flat word reaching it.
struct Element {
  ProjectiveMatrix matrix;
  std::string word;
};

/// All elements visited so far, keyed by canonical matrix (this dedup
/// quotients by every relation of the representation, the relator
/// included). layer is the last completed word length.
struct Frontier {
  unsigned layer = 0;
  std::unordered_map<ProjectiveMatrix, std::string, ProjectiveMatrixHash> elements;

  bool operator==(const Frontier& o) const {
    return layer == o.layer && elements == o.elements;
  }
};

using WitnessSink = std::function<void(const WitnessRecord&)>;

struct SearchStats {
  unsigned layers = 0;
  std::size_t elements = 0;
  std::size_t witnesses = 0;
  double seconds = 0.0;
};

/// Images of the four letters under the configured generators.
struct GeneratorSet {
  ProjectiveMatrix img[4];
  static GeneratorSet from_config(const SearchConfig& cfg);
  static GeneratorSet from_pair(const ProjectiveMatrix& a, const ProjectiveMatrix& b);
};

/// Layer expansion kernel: every entry of the previous layer extended by
/// every non-cancelling letter. The serial version is the reference; the
/// parallel version partitions entries across OpenMP threads and must
/// produce the same candidate multiset.
void expand_layer_serial(const std::vector<Element>& prev, const GeneratorSet& gens,
                         std::vector<Element>& out);
void expand_layer_parallel(const std::vector<Element>& prev, const GeneratorSet& gens,
                           unsigned threads, std::vector<Element>& out);

/// Exhaustive enumeration of group elements by shortest word length up to
/// max_length; emits a record for every nonidentity base-pair stabilizer
/// (torsion only with emit_torsion), each layer sorted, so identical
/// configs yield identical streams.
SearchStats bfs_search(const SearchConfig& cfg, const WitnessSink& sink);

/// Meet-in-the-middle: enumerate to half depth, index by tree vertex
/// pairs, and resolve collisions g, h into candidates g^-1 h. Emits
/// exactly the element set bfs_search emits at the same max_length;
/// words may differ but never exceed 2 * ceil(max_length / 2) letters.
SearchStats mitm_search(const SearchConfig& cfg, const WitnessSink& sink);

SearchStats run_search(const SearchConfig& cfg, const WitnessSink& sink);

/// Versioned line-oriented frontier file; see README for the format.
/// Entries are written in shortlex order, so files are byte-deterministic.
void persist_frontier(const Frontier& f, const std::filesystem::path& path);
Frontier load_frontier(const std::filesystem::path& path);

}  // namespace treeact
