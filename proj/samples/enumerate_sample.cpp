// Enumerates the minimal dominating sets of a small P8-free chordal graph
// and prints each one with its redundant part.

#include <iostream>

#include "domenum.hpp"

int main() {
  using namespace domenum;
  // Path 0-1-2-3-4-5 with a pendant vertex 6 on 2.
  Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
  auto cls = classify(g);

  std::cout << "redundant vertices:";
  for (Vertex v : cls.rn) std::cout << ' ' << v;
  std::cout << '\n';

  auto stream = enumerate_dom(g, Mode::kP8);
  int count = 0;
  while (auto d = stream->next()) {
    std::cout << '{';
    bool first = true;
    for (Vertex v : *d) {
      std::cout << (first ? "" : ", ") << v;
      first = false;
    }
    std::cout << "}  redundant part {";
    first = true;
    for (Vertex v : set_intersection(*d, cls.rn)) {
      std::cout << (first ? "" : ", ") << v;
      first = false;
    }
    std::cout << "}\n";
    ++count;
  }
  std::cout << count << " minimal dominating sets\n";
  return count == static_cast<int>(oracle::brute_dom(g).size()) ? 0 : 1;
}
