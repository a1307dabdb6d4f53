// Benchmark of the layer-expansion kernels: runs the Long-Reid enumeration
// to a given depth with the serial kernel and again with the OpenMP kernel,
// reports the time spent expanding, and checks both frontiers agree.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "treeact/search.hpp"
#include "treeact/words.hpp"

using namespace treeact;

namespace {

struct RunResult {
  Frontier frontier;
  double expand_seconds = 0.0;  // time inside the expansion kernel only
  double total_seconds = 0.0;
};

RunResult run(unsigned depth, unsigned threads) {
  SearchConfig cfg;
  const GeneratorSet gens = GeneratorSet::from_config(cfg);
  RunResult r;
  Frontier& f = r.frontier;
  f.elements.emplace(ProjectiveMatrix::identity(), std::string());
  std::vector<Element> current{{ProjectiveMatrix::identity(), std::string()}};

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Element> cands;
  for (unsigned layer = 1; layer <= depth; ++layer) {
    const auto e0 = std::chrono::steady_clock::now();
    if (threads == 1)
      expand_layer_serial(current, gens, cands);
    else
      expand_layer_parallel(current, gens, threads, cands);
    r.expand_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - e0).count();

    std::vector<const ProjectiveMatrix*> fresh;
    for (Element& c : cands) {
      auto [it, inserted] = f.elements.try_emplace(c.matrix, c.word);
      if (inserted)
        fresh.push_back(&it->first);
      else if (it->second.size() == c.word.size() && flat_lex_less(c.word, it->second))
        it->second = c.word;
    }
    current.clear();
    current.reserve(fresh.size());
    for (const ProjectiveMatrix* m : fresh) current.push_back({*m, f.elements.at(*m)});
    std::sort(current.begin(), current.end(),
              [](const Element& x, const Element& y) { return flat_lex_less(x.word, y.word); });
    f.layer = layer;
  }
  r.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  unsigned depth = 10;
  unsigned threads = 0;
  if (argc > 1) depth = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));
  if (argc > 2) threads = static_cast<unsigned>(std::strtoul(argv[2], nullptr, 10));

  std::cout << "depth " << depth << "\n";
  const RunResult serial = run(depth, 1);
  std::cout << "serial      expand " << serial.expand_seconds << "s  total "
            << serial.total_seconds << "s  elements " << serial.frontier.elements.size()
            << "\n";
  const RunResult parallel = run(depth, threads);
  std::cout << "parallel(" << (threads == 0 ? std::string("all") : std::to_string(threads))
            << ") expand " << parallel.expand_seconds << "s  total " << parallel.total_seconds
            << "s  elements " << parallel.frontier.elements.size() << "\n";
  if (serial.expand_seconds > 0 && parallel.expand_seconds > 0)
    std::cout << "expand speedup " << serial.expand_seconds / parallel.expand_seconds << "x\n";

  if (!(serial.frontier == parallel.frontier)) {
    std::cout << "FRONTIER MISMATCH between serial and parallel kernels\n";
    return 1;
  }
  std::cout << "frontiers agree\n";
  return 0;
}
