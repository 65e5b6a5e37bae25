#include "vknot/simplify.hpp"

#include <deque>
#include <unordered_set>

namespace vknot {

namespace {

std::vector<MoveEvent> deletions(const GaussDiagram& d) {
  return enumerate_moves(d, {MoveKind::R1_del, MoveKind::R2_del});
}

}  // namespace

SimplifyResult simplify(const GaussDiagram& d, long budget) {
  SimplifyResult res{d, {}, false};
  long spent = 0;
  while (!res.diagram.empty()) {
    if (auto del = deletions(res.diagram); !del.empty()) {
      if (spent >= budget) {
        res.budget_exhausted = true;
        return res;
      }
      ++spent;
      res.diagram = apply_move(res.diagram, del.front());
      res.trace.push_back(del.front());
      continue;
    }
    // Plateau: search R3 neighbours for a diagram that has a deletion.
    struct Node {
      GaussDiagram diagram;
      std::vector<MoveEvent> path;
    };
    std::deque<Node> queue{{res.diagram, {}}};
    std::unordered_set<std::string> seen{res.diagram.canonical_code()};
    bool found = false;
    while (!queue.empty() && !found) {
      Node node = std::move(queue.front());
      queue.pop_front();
      for (const MoveEvent& e : enumerate_moves(node.diagram, {MoveKind::R3})) {
        if (spent >= budget) {
          res.budget_exhausted = true;
          return res;
        }
        ++spent;
        GaussDiagram next = apply_move(node.diagram, e);
        if (!seen.insert(next.canonical_code()).second) continue;
        std::vector<MoveEvent> path = node.path;
        path.push_back(e);
        if (!deletions(next).empty()) {
          res.diagram = std::move(next);
          res.trace.insert(res.trace.end(), path.begin(), path.end());
          found = true;
          break;
        }
        queue.push_back({std::move(next), std::move(path)});
      }
    }
    if (!found) break;
  }
  return res;
}

}  // namespace vknot
