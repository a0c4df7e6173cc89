#include "kpx/fixtures.hpp"

#include <charconv>

namespace kpx::fixtures {

  KGraphSpec lambda2() {
    KGraphSpec s = lambda2_without_square();
    s.squares    = {SquareSpec{{"e1", "f1"}, {"f2", "e2"}}};
    return s;
  }

  KGraphSpec lambda2_without_square() {
    KGraphSpec s;
    s.k        = 2;
    s.vertices = {"v1", "v2", "v3", "v4", "v5"};
    s.edges    = {EdgeSpec{"e1", 1, "v1", "v2"},
                  EdgeSpec{"e2", 1, "v3", "v4"},
                  EdgeSpec{"e3", 1, "v1", "v5"},
                  EdgeSpec{"f1", 2, "v2", "v4"},
                  EdgeSpec{"f2", 2, "v1", "v3"}};
    return s;
  }

  KGraphSpec loop() {
    KGraphSpec s;
    s.k        = 1;
    s.vertices = {"v"};
    s.edges    = {EdgeSpec{"e", 1, "v", "v"}};
    return s;
  }

  KGraphSpec lambda1_truncated(int n) {
    KGraphSpec s;
    s.k        = 2;
    s.vertices = {"v"};
    s.edges    = {EdgeSpec{"e", 1, "v", "v"}};
    for (int i = 1; i <= n; ++i) {
      std::string f = "f" + std::to_string(i);
      s.edges.push_back(EdgeSpec{f, 2, "v", "v"});
      s.squares.push_back(SquareSpec{{"e", f}, {f, "e"}});
    }
    return s;
  }

  KGraphSpec two_vertices() {
    KGraphSpec s;
    s.k        = 1;
    s.vertices = {"u", "w"};
    return s;
  }

  std::optional<KGraphSpec> fixture(std::string_view name) {
    if (name == "lambda2") {
      return lambda2();
    }
    if (name == "lambda2-nosquare") {
      return lambda2_without_square();
    }
    if (name == "loop") {
      return loop();
    }
    if (name == "two-vertices") {
      return two_vertices();
    }
    constexpr std::string_view prefix = "lambda1-";
    if (name.substr(0, prefix.size()) == prefix) {
      auto digits = name.substr(prefix.size());
      int  n      = 0;
      auto [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec == std::errc() && ptr == digits.data() + digits.size() && n > 0) {
        return lambda1_truncated(n);
      }
    }
    return std::nullopt;
  }

  std::vector<std::string> fixture_names() {
    return {"lambda2", "lambda2-nosquare", "loop", "lambda1-N", "two-vertices"};
  }

}  // namespace kpx::fixtures
