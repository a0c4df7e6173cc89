#ifndef KPX_CLI_HPP_
#define KPX_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kpx/groupoid.hpp"
#include "kpx/kgraph.hpp"
#include "kpx/kp_algebra.hpp"

namespace kpx::cli {

  // Graph files are YAML (JSON is accepted as a subset).  Errors are
  // ParseError with line and column.
  KGraphSpec  parse_graph_spec(std::string const& text);
  KGraphSpec  load_graph_spec(std::string const& path);
  std::string dump_graph_spec(KGraphSpec const& spec);

  // expr := term (('+'|'-') term)*
  // term := [coef '*'] factor ('*' factor)*
  // coef := int | int '/' int
  // factor := 's(' path ')' | 'g(' path ')'
  SpanForm parse_element(KPAlgebra const& kp, std::string_view text);

  // "λ:μ" or "λ:μ\ν1,ν2".
  Cell parse_cell(Groupoid const& gr, std::string_view text);

  // Exit codes: 0 success, 1 a zero/equal query answered false, 2 input
  // error, 3 an undecided verdict.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace kpx::cli

#endif  // KPX_CLI_HPP_
