#include "kpx/cli.hpp"

#include <yaml-cpp/yaml.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "kpx/analysis.hpp"
#include "kpx/error.hpp"
#include "kpx/fixtures.hpp"

namespace kpx::cli {

  using nlohmann::json;

  namespace {

    [[noreturn]] void parse_fail(YAML::Mark const& mark, std::string const& what) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(mark.line + 1) + ", column " +
                                             std::to_string(mark.column + 1) + ": " + what);
    }

    YAML::Node field(YAML::Node const& node, char const* key) {
      if (!node.IsMap()) {
        parse_fail(node.Mark(), "expected a mapping");
      }
      YAML::Node v = node[key];
      if (!v) {
        parse_fail(node.Mark(), std::string("missing field '") + key + "'");
      }
      return v;
    }

    template <class T>
    T scalar(YAML::Node const& node, char const* what) {
      try {
        if (!node.IsScalar()) {
          parse_fail(node.Mark(), std::string("expected a scalar for ") + what);
        }
        return node.as<T>();
      } catch (YAML::Exception const&) {
        parse_fail(node.Mark(), std::string("malformed ") + what + " '" + node.Scalar() + "'");
      }
    }

    YAML::Node sequence(YAML::Node const& node, char const* what) {
      if (!node.IsSequence()) {
        parse_fail(node.Mark(), std::string("expected a list for ") + what);
      }
      return node;
    }

    std::array<std::string, 2> edge_pair(YAML::Node const& node) {
      auto seq = sequence(node, "square side");
      if (seq.size() != 2) {
        parse_fail(node.Mark(), "a square side needs exactly two edges");
      }
      return {scalar<std::string>(seq[0], "edge id"), scalar<std::string>(seq[1], "edge id")};
    }

    Degree parse_degree(std::string_view text, std::size_t k) {
      std::vector<int>  c;
      std::string       s(text);
      std::stringstream ss(s);
      std::string       part;
      while (std::getline(ss, part, ',')) {
        try {
          std::size_t used = 0;
          c.push_back(std::stoi(part, &used));
          if (used != part.size()) {
            throw std::invalid_argument(part);
          }
        } catch (std::exception const&) {
          throw Error(ErrorKind::ParseError, "malformed degree '" + s + "'");
        }
      }
      if (c.size() != k) {
        throw Error(ErrorKind::DegreeOutOfRange,
                    "degree '" + s + "' does not have " + std::to_string(k) + " coordinates");
      }
      return Degree(std::move(c));
    }

    // Recursive descent over the element grammar.
    class ElementParser {
     public:
      ElementParser(KPAlgebra const& kp, std::string_view text) : kp_(kp), text_(text) {}

      SpanForm parse() {
        std::vector<std::pair<Scalar, Word>> terms;
        skip();
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
          sign = get() == '-' ? -1 : 1;
        }
        terms.push_back(term(sign));
        while (true) {
          skip();
          if (at_end()) {
            break;
          }
          char op = get();
          if (op != '+' && op != '-') {
            fail("expected '+' or '-'");
          }
          terms.push_back(term(op == '-' ? -1 : 1));
        }
        return kp_.reduce(terms);
      }

     private:
      std::pair<Scalar, Word> term(int sign) {
        skip();
        Scalar coef = sign;
        Word   word;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          coef *= coefficient();
          skip();
          expect('*');
        }
        word.push_back(factor());
        while (true) {
          skip();
          if (peek() != '*') {
            break;
          }
          get();
          word.push_back(factor());
        }
        return {coef, word};
      }

      Scalar coefficient() {
        Integer num = integer();
        skip();
        if (peek() == '/') {
          get();
          skip();
          Integer den = integer();
          if (den == 0) {
            fail("zero denominator");
          }
          return Scalar(num, den);
        }
        return Scalar(num);
      }

      Integer integer() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          ++pos_;
        }
        if (start == pos_) {
          fail("expected an integer");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
      }

      Generator factor() {
        skip();
        char kind = get();
        if (kind != 's' && kind != 'g') {
          --pos_;
          fail("expected 's(' or 'g('");
        }
        skip();
        expect('(');
        skip();
        std::size_t start = pos_;
        while (!at_end() && is_id_char(peek())) {
          ++pos_;
        }
        std::string_view id = text_.substr(start, pos_ - start);
        if (id.empty()) {
          fail("expected a path");
        }
        skip();
        expect(')');
        Path p = kp_.graph().parse_path(id);
        return kind == 's' ? Generator::path_symbol(p) : Generator::ghost_symbol(p);
      }

      static bool is_id_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
      }

      void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool at_end() const {
        return pos_ >= text_.size();
      }

      char peek() const {
        return at_end() ? '\0' : text_[pos_];
      }

      char get() {
        if (at_end()) {
          fail("unexpected end of input");
        }
        return text_[pos_++];
      }

      void expect(char c) {
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw Error(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + what);
      }

      KPAlgebra const& kp_;
      std::string_view text_;
      std::size_t      pos_ = 0;
    };

    std::string tri_text(Tri t) {
      return std::string(to_string(t));
    }

    std::string aperiodic_text(KGraph const& g, AperiodicityVerdict const& v) {
      switch (v.status) {
        case AperiodicityVerdict::Status::Aperiodic:
          return "true (" + v.certificate + ")";
        case AperiodicityVerdict::Status::Periodic:
          return "false (periodic at " + g.vertex_name(v.vertex) + ": n=" + v.n.to_string() +
                 ", m=" + v.m.to_string() + ", mu=" + g.to_string(v.mu) +
                 ", alpha=" + g.to_string(v.alpha) + ", nu=" + g.to_string(v.nu) + ")";
        case AperiodicityVerdict::Status::Unknown:
          break;
      }
      return "unknown (" + v.bounds + ")";
    }

    std::string cofinal_text(KGraph const& g, CofinalityVerdict const& v) {
      switch (v.status) {
        case CofinalityVerdict::Status::Cofinal:
          return "true (" + v.certificate + ")";
        case CofinalityVerdict::Status::NotCofinal:
          return "false (" + g.vertex_name(v.vertex) + " does not reach " +
                 Boundary(g).to_string(*v.x) + ")";
        case CofinalityVerdict::Status::Unknown:
          break;
      }
      return "unknown (" + v.bounds + ")";
    }

    std::string conclusion(SimplicityReport const& r) {
      if (r.simple == Tri::True) {
        return "simple";
      }
      if (r.basically_simple == Tri::True) {
        return "basically simple, not simple";
      }
      if (r.basically_simple == Tri::False) {
        return "not basically simple";
      }
      return "undecided";
    }

    json paths_json(KGraph const& g, std::vector<Path> const& ps) {
      json a = json::array();
      for (auto const& p : ps) {
        a.push_back(g.to_string(p));
      }
      return a;
    }

    void print_lines(std::ostream& out, KGraph const& g, std::vector<Path> ps) {
      std::sort(ps.begin(), ps.end());
      for (auto const& p : ps) {
        out << g.to_string(p) << "\n";
      }
    }

    json cells_json(Groupoid const& gr, std::vector<Cell> const& cs) {
      json a = json::array();
      for (auto const& c : cs) {
        a.push_back(gr.to_string(c));
      }
      return a;
    }

    int budget_default() {
      if (char const* env = std::getenv("KPX_BUDGET")) {
        try {
          int b = std::stoi(env);
          if (b >= 0) {
            return b;
          }
        } catch (std::exception const&) {
        }
        throw Error(ErrorKind::ParseError, std::string("malformed KPX_BUDGET '") + env + "'");
      }
      return AnalysisBounds{}.cycle_length;
    }

  }  // namespace

  KGraphSpec parse_graph_spec(std::string const& text) {
    YAML::Node root;
    try {
      root = YAML::Load(text);
    } catch (YAML::ParserException const& e) {
      parse_fail(e.mark, e.msg);
    }
    KGraphSpec spec;
    spec.k = scalar<int>(field(root, "k"), "k");
    for (auto const& v : sequence(field(root, "vertices"), "vertices")) {
      spec.vertices.push_back(scalar<std::string>(v, "vertex id"));
    }
    for (auto const& e : sequence(field(root, "edges"), "edges")) {
      EdgeSpec es;
      es.id     = scalar<std::string>(field(e, "id"), "edge id");
      es.color  = scalar<int>(field(e, "color"), "color");
      es.range  = scalar<std::string>(field(e, "range"), "range");
      es.source = scalar<std::string>(field(e, "source"), "source");
      spec.edges.push_back(std::move(es));
    }
    if (root["squares"]) {
      for (auto const& s : sequence(root["squares"], "squares")) {
        spec.squares.push_back({edge_pair(field(s, "first")), edge_pair(field(s, "second"))});
      }
    }
    return spec;
  }

  KGraphSpec load_graph_spec(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::ParseError, "cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph_spec(ss.str());
  }

  std::string dump_graph_spec(KGraphSpec const& spec) {
    json j;
    j["k"]        = spec.k;
    j["vertices"] = spec.vertices;
    j["edges"]    = json::array();
    for (auto const& e : spec.edges) {
      j["edges"].push_back(
          {{"id", e.id}, {"color", e.color}, {"range", e.range}, {"source", e.source}});
    }
    j["squares"] = json::array();
    for (auto const& s : spec.squares) {
      j["squares"].push_back({{"first", s.first}, {"second", s.second}});
    }
    return j.dump(2);
  }

  SpanForm parse_element(KPAlgebra const& kp, std::string_view text) {
    return ElementParser(kp, text).parse();
  }

  Cell parse_cell(Groupoid const& gr, std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "a cell is written lambda:mu or lambda:mu\\nu1,nu2");
    }
    auto              rest  = text.substr(colon + 1);
    auto              slash = rest.find('\\');
    KGraph const&     g     = gr.graph();
    Path              l     = g.parse_path(text.substr(0, colon));
    Path              m     = g.parse_path(rest.substr(0, slash));
    std::vector<Path> avoid;
    if (slash != std::string_view::npos) {
      std::string       list(rest.substr(slash + 1));
      std::stringstream ss(list);
      std::string       item;
      while (std::getline(ss, item, ',')) {
        avoid.push_back(g.parse_path(item));
      }
    }
    return gr.make_cell(l, m, avoid);
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with finitely aligned k-graphs and Kumjian-Pask algebras",
                 "kpx"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string graph_file;
    std::string fixture_name;
    std::string omega;
    std::string ring_text = "q";
    bool        as_json   = false;
    auto* src_file = app.add_option("-g,--graph", graph_file, "Graph file (YAML or JSON)");
    auto* src_fix  = app.add_option("--fixture", fixture_name, "Built-in graph")
                        ->check(CLI::IsMember(fixtures::fixture_names()));
    auto* src_omega = app.add_option("--omega", omega, "The graph Omega_{k,m}, written k:m1,...,mk");
    src_file->excludes(src_fix)->excludes(src_omega);
    src_fix->excludes(src_omega);
    app.add_option("--ring", ring_text, "Coefficient ring: z, q or zmod:N");
    app.add_flag("--json", as_json, "Machine-readable output");

    auto* c_validate = app.add_subcommand("validate", "Check the factorization property");
    auto* c_dump     = app.add_subcommand("dump", "Print the graph as JSON");
    auto* c_info     = app.add_subcommand("info", "Print graph predicates");

    auto*       c_paths = app.add_subcommand("paths", "List paths of a given degree");
    std::string from;
    std::string degree_text;
    bool        leq = false;
    c_paths->add_option("--from", from, "Range vertex")->required();
    c_paths->add_option("--degree", degree_text, "Degree n1,...,nk")->required();
    c_paths->add_flag("--leq", leq, "All degrees <= n");

    auto*       c_mce = app.add_subcommand("mce", "Minimal common extensions");
    std::string mce_l;
    std::string mce_m;
    c_mce->add_option("lambda", mce_l)->required();
    c_mce->add_option("mu", mce_m)->required();

    auto*                    c_exh = app.add_subcommand("exhaustive", "Test a finite set for exhaustiveness");
    std::string              exh_vertex;
    std::vector<std::string> exh_set;
    c_exh->add_option("--vertex", exh_vertex)->required();
    c_exh->add_option("E", exh_set);

    auto* c_boundary = app.add_subcommand("boundary", "List boundary paths");
    bool  orbits     = false;
    c_boundary->add_flag("--orbits", orbits, "Group into shift-tail orbits");

    auto*       c_eval = app.add_subcommand("eval", "Reduce an element to span form");
    std::string eval_expr;
    bool        by_grade = false;
    c_eval->add_option("expr", eval_expr)->required();
    c_eval->add_flag("--grade", by_grade, "Split into graded parts");

    auto*       c_zero = app.add_subcommand("zero", "Decide whether an element is zero");
    std::string zero_expr;
    c_zero->add_option("expr", zero_expr)->required();

    auto*       c_equal = app.add_subcommand("equal", "Decide whether two elements are equal");
    std::string eq_a;
    std::string eq_b;
    c_equal->add_option("a", eq_a)->required();
    c_equal->add_option("b", eq_b)->required();

    auto*                    c_refine = app.add_subcommand("refine", "Disjointify groupoid cells");
    std::vector<std::string> cells;
    c_refine->add_option("cells", cells, "Cells lambda:mu\\nu1,nu2")->required();

    auto*              c_analyze = app.add_subcommand("analyze", "Aperiodicity, cofinality and simplicity");
    std::optional<int> bound;
    c_analyze->add_option("--bound", bound, "Search bound on cycle degree")
        ->check(CLI::NonNegativeNumber);

    auto* c_dim = app.add_subcommand("dim", "Dimension over a field (acyclic graphs)");

    std::vector<char const*> argv{"kpx"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
      KGraphSpec spec;
      if (!graph_file.empty()) {
        spec = load_graph_spec(graph_file);
      } else if (!fixture_name.empty()) {
        spec = *fixtures::fixture(fixture_name);
      } else if (!omega.empty()) {
        auto colon = omega.find(':');
        if (colon == std::string::npos) {
          throw Error(ErrorKind::ParseError, "--omega expects k:m1,...,mk");
        }
        int k = 0;
        try {
          k = std::stoi(omega.substr(0, colon));
        } catch (std::exception const&) {
          throw Error(ErrorKind::ParseError, "malformed rank in --omega");
        }
        if (k < 1) {
          throw Error(ErrorKind::ParseError, "--omega needs k >= 1");
        }
        spec = omega_spec(static_cast<std::size_t>(k),
                          parse_degree(omega.substr(colon + 1), static_cast<std::size_t>(k)));
      } else {
        throw Error(ErrorKind::ParseError, "no graph given; use --graph, --fixture or --omega");
      }
      KGraph g    = KGraph::validate(spec);
      Ring   ring = Ring::parse(ring_text);

      if (*c_validate) {
        if (as_json) {
          out << json{{"valid", true},
                      {"k", g.rank()},
                      {"vertices", g.number_of_vertices()},
                      {"edges", g.number_of_edges()},
                      {"squares", g.number_of_squares()}}
                     .dump(2)
              << "\n";
        } else {
          out << "valid " << g.rank() << "-graph: " << g.number_of_vertices() << " vertices, "
              << g.number_of_edges() << " edges, " << g.number_of_squares() << " squares\n";
        }
        return 0;
      }

      if (*c_dump) {
        out << dump_graph_spec(g.spec()) << "\n";
        return 0;
      }

      if (*c_info) {
        auto p = g.predicates();
        json j{{"k", g.rank()},
               {"vertices", g.number_of_vertices()},
               {"edges", g.number_of_edges()},
               {"squares", g.number_of_squares()},
               {"acyclic", p.is_acyclic},
               {"has_sources", p.has_sources},
               {"locally_convex", p.is_locally_convex},
               {"row_finite", p.is_row_finite}};
        if (as_json) {
          out << j.dump(2) << "\n";
        } else {
          for (auto const& [key, value] : j.items()) {
            out << key << ": " << value.dump() << "\n";
          }
        }
        return 0;
      }

      if (*c_paths) {
        VertexId v  = g.vertex_id(from);
        Degree   n  = parse_degree(degree_text, g.rank());
        auto     ps = leq ? g.paths_leq(v, n) : g.paths_from(v, n);
        std::sort(ps.begin(), ps.end());
        if (as_json) {
          out << paths_json(g, ps).dump(2) << "\n";
        } else {
          print_lines(out, g, ps);
        }
        return 0;
      }

      if (*c_mce) {
        auto ps = g.mce(g.parse_path(mce_l), g.parse_path(mce_m));
        std::sort(ps.begin(), ps.end());
        if (as_json) {
          out << paths_json(g, ps).dump(2) << "\n";
        } else {
          print_lines(out, g, ps);
        }
        return 0;
      }

      if (*c_exh) {
        VertexId          v = g.vertex_id(exh_vertex);
        std::vector<Path> E;
        for (auto const& s : exh_set) {
          E.push_back(g.parse_path(s));
        }
        auto r = g.exhaustive(v, E);
        if (as_json) {
          json j{{"exhaustive", r.exhaustive}};
          if (r.witness) {
            j["witness"] = g.to_string(*r.witness);
          }
          out << j.dump(2) << "\n";
        } else if (r.exhaustive) {
          out << "exhaustive\n";
        } else {
          out << "not exhaustive: " << g.to_string(*r.witness) << " has no common extension\n";
        }
        return 0;
      }

      if (*c_boundary) {
        Boundary b(g);
        if (orbits) {
          json j = json::array();
          for (auto const& orbit : b.orbits()) {
            json o = json::array();
            for (auto const& x : orbit) {
              o.push_back(b.to_string(x));
            }
            j.push_back(o);
          }
          if (as_json) {
            out << j.dump(2) << "\n";
          } else {
            for (auto const& o : j) {
              std::string line;
              for (auto const& x : o) {
                line += (line.empty() ? "" : " ") + x.get<std::string>();
              }
              out << line << "\n";
            }
          }
        } else {
          auto xs = b.enumerate();
          std::sort(xs.begin(), xs.end());
          json j  = json::array();
          for (auto const& x : xs) {
            j.push_back(b.to_string(x));
          }
          if (as_json) {
            out << j.dump(2) << "\n";
          } else {
            for (auto const& x : j) {
              out << x.get<std::string>() << "\n";
            }
          }
        }
        return 0;
      }

      KPAlgebra kp(g, ring);

      if (*c_eval) {
        SpanForm a = parse_element(kp, eval_expr);
        if (by_grade) {
          json j = json::object();
          for (auto const& [grade, part] : kp.grade(a)) {
            j[to_string(grade)] = kp.to_string(part);
          }
          if (as_json) {
            out << j.dump(2) << "\n";
          } else {
            for (auto const& [grade, part] : kp.grade(a)) {
              out << to_string(grade) << ": " << kp.to_string(part) << "\n";
            }
          }
        } else if (as_json) {
          out << json{{"element", kp.to_string(a)}}.dump(2) << "\n";
        } else {
          out << kp.to_string(a) << "\n";
        }
        return 0;
      }

      if (*c_zero) {
        bool z = kp.is_zero(parse_element(kp, zero_expr));
        out << (as_json ? json{{"zero", z}}.dump(2) : std::string(z ? "zero" : "nonzero")) << "\n";
        return z ? 0 : 1;
      }

      if (*c_equal) {
        bool e = kp.equals(parse_element(kp, eq_a), parse_element(kp, eq_b));
        out << (as_json ? json{{"equal", e}}.dump(2) : std::string(e ? "equal" : "not equal"))
            << "\n";
        return e ? 0 : 1;
      }

      Groupoid gr(g);

      if (*c_refine) {
        std::vector<Cell> cs;
        for (auto const& c : cells) {
          cs.push_back(parse_cell(gr, c));
        }
        auto parts = gr.disjointify(cs);
        std::sort(parts.begin(), parts.end());
        if (as_json) {
          out << cells_json(gr, parts).dump(2) << "\n";
        } else {
          for (auto const& c : parts) {
            out << gr.to_string(c) << "\n";
          }
        }
        return 0;
      }

      if (*c_analyze) {
        AnalysisBounds bounds;
        bounds.cycle_length = bound ? *bound : budget_default();
        auto r              = report(g, ring, bounds);
        auto f              = boundary_rep_faithful(g, bounds);
        std::string faithful = tri_text(f.faithful);
        if (f.kernel_witness) {
          faithful += " (kernel contains " + kp.to_string(*f.kernel_witness) + ")";
        }
        std::vector<std::pair<std::string, std::string>> lines{
            {"aperiodic", aperiodic_text(g, r.aperiodic)},
            {"cofinal", cofinal_text(g, r.cofinal)},
            {"effective", tri_text(r.effective.value)},
            {"minimal", tri_text(r.minimal.value)},
            {"ck_uniqueness_applicable", tri_text(r.ck_uniqueness_applicable)},
            {"boundary_rep_faithful", faithful},
            {"ring", r.ring + (r.ring_is_field ? " (field)" : " (not a field)")},
            {"basically_simple", tri_text(r.basically_simple)},
            {"simple", tri_text(r.simple)},
            {"conclusion", conclusion(r)}};
        if (as_json) {
          json j = json::object();
          for (auto const& [k, v] : lines) {
            j[k] = v;
          }
          j["bounds"] = r.aperiodic.bounds;
          out << j.dump(2) << "\n";
        } else {
          for (auto const& [k, v] : lines) {
            out << k << ": " << v << "\n";
          }
        }
        return r.simple == Tri::Unknown ? 3 : 0;
      }

      if (*c_dim) {
        Integer d = gr.dim_over_field(ring);
        out << (as_json ? json{{"dim", d.str()}}.dump(2) : d.str()) << "\n";
        return 0;
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    return 2;
  }

}  // namespace kpx::cli
