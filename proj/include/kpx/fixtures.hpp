#ifndef KPX_FIXTURES_HPP_
#define KPX_FIXTURES_HPP_

#include <optional>
#include <string_view>
#include <vector>
#include <string>

#include "kpx/kgraph.hpp"

namespace kpx::fixtures {

  // The acyclic 2-graph with vertices v1..v5, edges e1,e2,e3 (color 1),
  // f1,f2 (color 2) and the single square e1 f1 = f2 e2.
  KGraphSpec lambda2();
  // Same skeleton without its square; fails validation.
  KGraphSpec lambda2_without_square();
  // One vertex v with one loop e, k = 1.
  KGraphSpec loop();
  // One vertex v, a color-1 loop e and color-2 loops f1..fn with e fi = fi e.
  KGraphSpec lambda1_truncated(int n);
  // Two vertices u, w and no edges, k = 1.
  KGraphSpec two_vertices();

  // Names accepted by fixture(): lambda2, lambda2-nosquare, loop,
  // lambda1-N (for a positive integer N), two-vertices.
  std::optional<KGraphSpec> fixture(std::string_view name);
  std::vector<std::string>  fixture_names();

}  // namespace kpx::fixtures

#endif  // KPX_FIXTURES_HPP_
