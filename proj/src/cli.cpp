#include "malcev/cli.hpp"

#include <cstdlib>   // for getenv, strtoull
#include <fstream>   // for ofstream
#include <optional>  // for optional
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <vector>    // for vector

#include "CLI11.hpp"
#include "json.hpp"

#include "malcev/cayley.hpp"
#include "malcev/congruence.hpp"
#include "malcev/group_derivation.hpp"
#include "malcev/ideals.hpp"
#include "malcev/presentation.hpp"
#include "malcev/rewriting.hpp"
#include "malcev/suites.hpp"

namespace malcev::cli {

  using json = nlohmann::json;

  namespace {

    struct RunConfig {
      int                      n = 1;
      std::string              presentation_file;
      std::vector<std::string> words;
      std::string              p, q;
      std::string              root = "1";
      std::size_t              radius = 1;
      std::string              dot_path;
      std::string              suite;
      std::size_t              max_length = 2;
      std::optional<std::size_t> window;
      std::size_t              samples = 50;
      std::optional<std::uint64_t> seed;
      std::string              format = "text";
      std::string              out_path;
    };

    // What a subcommand produces before it is rendered.
    struct Outcome {
      int                      code = success;
      std::string              text;
      json                     result;
      std::vector<std::string> violations;
    };

    std::uint64_t default_seed() {
      if (char const* env = std::getenv("MALCEV_SEED")) {
        char*      end   = nullptr;
        auto const value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') {
          return value;
        }
      }
      return default_sample_seed;
    }

    json words_json(std::vector<Element> const& es) {
      json arr = json::array();
      for (auto const& e : es) {
        arr.push_back(format_word(e.nf));
      }
      return arr;
    }

    template <class Range>
    std::string join(Range const& range, std::string const& sep) {
      std::string out;
      for (auto const& s : range) {
        out += (out.empty() ? "" : sep) + s;
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    Outcome cmd_gen(Presentation const& pres) {
      Outcome              o;
      std::vector<std::string> gens, p, q, l, r;
      for (auto const& x : pres.generators()) {
        gens.push_back(x.token());
      }
      for (auto const& x : pres.p_set()) {
        p.push_back(x.token());
      }
      for (auto const& x : pres.q_set()) {
        q.push_back(x.token());
      }
      for (auto const& w : pres.l_words()) {
        l.push_back(format_word(w));
      }
      for (auto const& w : pres.r_words()) {
        r.push_back(format_word(w));
      }
      json rels = json::array();
      std::ostringstream text;
      text << "generators (" << gens.size() << "): " << join(gens, " ") << "\n";
      text << "relations (" << pres.relations().size() << "):\n";
      for (auto const& rel : pres.relations()) {
        rels.push_back({format_word(rel.left), format_word(rel.right)});
        text << "  " << format_word(rel.left) << " = " << format_word(rel.right)
             << "\n";
      }
      text << "P: " << join(p, " ") << "\n";
      text << "Q: " << join(q, " ") << "\n";
      text << "L: " << join(l, ", ") << "\n";
      text << "R: " << join(r, ", ") << "\n";
      o.text   = text.str();
      o.result = {{"generators", gens},
                  {"relations", rels},
                  {"p", p},
                  {"q", q},
                  {"l", l},
                  {"r", r}};
      return o;
    }

    Outcome cmd_nf(Presentation const& pres, RunConfig const& cfg) {
      if (cfg.words.size() != 1) {
        throw CLI::ValidationError("nf", "expects exactly one -w WORD");
      }
      auto const e = left_normal_form(parse_word(cfg.words[0], pres), pres);
      Outcome    o;
      o.text   = format_word(e.nf) + "\n";
      o.result = {{"word", cfg.words[0]},
                  {"normal_form", format_word(e.nf)},
                  {"intersection_base", is_intersection_base(e, pres)}};
      return o;
    }

    Outcome cmd_eq(Presentation const& pres, RunConfig const& cfg) {
      if (cfg.words.size() != 2) {
        throw CLI::ValidationError("eq", "expects exactly two -w WORD options");
      }
      auto const w1 = parse_word(cfg.words[0], pres);
      auto const w2 = parse_word(cfg.words[1], pres);
      bool const eq = equal(w1, w2, pres);
      Outcome    o;
      o.code   = eq ? success : predicate_false;
      o.text   = eq ? "true\n" : "false\n";
      o.result = {{"equal", eq},
                  {"normal_forms",
                   {format_word(left_normal_form(w1, pres).nf),
                    format_word(left_normal_form(w2, pres).nf)}}};
      return o;
    }

    Outcome cmd_divides(Presentation const& pres, RunConfig const& cfg) {
      auto const witness
          = left_divides(parse_word(cfg.p, pres), parse_word(cfg.q, pres), pres);
      Outcome o;
      o.code = witness ? success : predicate_false;
      o.text = (witness ? format_word(*witness) : std::string("none")) + "\n";
      o.result = {{"divides", witness.has_value()},
                  {"witness",
                   witness ? json(format_word(*witness)) : json(nullptr)}};
      return o;
    }

    Outcome cmd_intersect(Presentation const& pres, RunConfig const& cfg) {
      auto const p = left_normal_form(parse_word(cfg.p, pres), pres);
      auto const q = left_normal_form(parse_word(cfg.q, pres), pres);
      auto const r = intersect_principal(p, q, pres);
      Outcome    o;
      std::vector<std::string> quoted;
      for (auto const& g : r.generators) {
        quoted.push_back("\"" + format_word(g.nf) + "\"");
      }
      o.text = std::string(to_string(r.kind));
      if (!quoted.empty()) {
        o.text += ": " + join(quoted, ", ");
      }
      o.text += "\nprovenance: " + std::string(to_string(r.provenance)) + "\n";
      o.result = {{"p", format_word(p.nf)},
                  {"q", format_word(q.nf)},
                  {"kind", to_string(r.kind)},
                  {"generators", words_json(r.generators)},
                  {"provenance", to_string(r.provenance)}};
      return o;
    }

    Outcome cmd_ball(Presentation const& pres, RunConfig const& cfg) {
      auto const root = left_normal_form(parse_word(cfg.root, pres), pres);
      auto const ball = build_ball(root, cfg.radius, pres);
      Outcome    o;
      std::ostringstream text;
      text << "root: " << format_word(root.nf) << "\nradius: " << cfg.radius
           << "\nvertices: " << ball.vertices().size()
           << "\nedges: " << ball.edges().size() << "\n";
      json edges = json::array();
      for (auto const& e : ball.edges()) {
        edges.push_back({format_word(ball.vertices()[e.source].nf),
                         e.label.token(),
                         format_word(ball.vertices()[e.target].nf)});
      }
      o.result = {{"root", format_word(root.nf)},
                  {"radius", cfg.radius},
                  {"vertices", words_json(ball.vertices())},
                  {"edges", edges}};
      if (!cfg.dot_path.empty()) {
        auto const dot = export_dot(ball);
        if (cfg.dot_path == "-") {
          text << dot;
        } else {
          std::ofstream file(cfg.dot_path);
          if (!file) {
            throw MalcevError(ErrorKind::invalid_argument,
                              "cannot write " + cfg.dot_path);
          }
          file << dot;
          text << "dot: " << cfg.dot_path << "\n";
        }
        o.result["dot"] = cfg.dot_path;
      }
      o.text = text.str();
      return o;
    }

    Outcome suite_outcome(SuiteReport const& report, std::size_t max_length) {
      Outcome o;
      o.code       = report.ok() ? success : predicate_false;
      o.violations = report.violations;
      std::ostringstream text;
      text << "suite: " << report.suite << "\nmax length: " << max_length
           << "\nchecked: " << report.checked
           << "\nviolations: " << report.violations.size() << "\n";
      for (auto const& v : report.violations) {
        text << "  " << v << "\n";
      }
      o.text   = text.str();
      o.result = {{"suite", report.suite},
                  {"max_length", max_length},
                  {"checked", report.checked},
                  {"ok", report.ok()}};
      return o;
    }

    Outcome cmd_alignment(Presentation const& pres, RunConfig const& cfg) {
      AlignmentConfig ac;
      ac.max_length = cfg.max_length;
      ac.window     = cfg.window.value_or(cfg.max_length + 3);
      ac.samples    = cfg.samples;
      ac.seed       = cfg.seed.value_or(default_seed());
      auto const r  = verify_alignment(pres, ac);

      Outcome o;
      o.code       = r.ok() ? success : predicate_false;
      o.violations = r.violations;
      json non_principal = json::array();
      std::ostringstream text;
      text << "suite: alignment\nn: " << r.n << "\nmax length: " << ac.max_length
           << "\nelements: " << r.element_count << "\npairs: " << r.pair_count
           << "\nmax generators: " << r.max_generators
           << " (bound " << alignment_bound(pres) << ")"
           << "\nempty: " << r.empty_count
           << "\nbase search: " << r.base_search_count
           << "\nnon-principal pairs: " << r.non_principal.size() << "\n";
      for (auto const& np : r.non_principal) {
        std::vector<std::string> gens;
        for (auto const& g : np.generators) {
          gens.push_back(format_word(g.nf));
        }
        text << "  (" << format_word(np.p.nf) << ", " << format_word(np.q.nf)
             << ") -> " << join(gens, ", ") << "\n";
        non_principal.push_back({{"p", format_word(np.p.nf)},
                                 {"q", format_word(np.q.nf)},
                                 {"generators", gens}});
      }
      text << "oracle pairs: " << r.oracle_pairs << " (window max(|p|,|q|) + "
           << ac.window - ac.max_length << ", seed " << ac.seed << ")"
           << "\nviolations: " << r.violations.size() << "\n";
      for (auto const& v : r.violations) {
        text << "  " << v << "\n";
      }
      o.text   = text.str();
      o.result = {{"suite", "alignment"},
                  {"max_length", ac.max_length},
                  {"window", ac.window},
                  {"samples", ac.samples},
                  {"seed", ac.seed},
                  {"elements", r.element_count},
                  {"pairs", r.pair_count},
                  {"max_generators", r.max_generators},
                  {"bound", alignment_bound(pres)},
                  {"empty", r.empty_count},
                  {"base_search", r.base_search_count},
                  {"non_principal", non_principal},
                  {"oracle_pairs", r.oracle_pairs},
                  {"ok", r.ok()}};
      return o;
    }

    Outcome cmd_verify(Presentation const& pres, RunConfig const& cfg) {
      auto const L = cfg.max_length;
      if (cfg.suite == "nf-oracle") {
        return suite_outcome(nf_oracle_suite(pres, L), L);
      } else if (cfg.suite == "cancellative") {
        return suite_outcome(cancellative_suite(pres, L, L == 0 ? 0 : L - 1), L);
      } else if (cfg.suite == "codet") {
        return suite_outcome(codeterminism_suite(pres, L), L);
      } else if (cfg.suite == "indegree") {
        return suite_outcome(indegree_suite(pres, L), L);
      }
      if (cfg.window && *cfg.window < L + 1) {
        throw CLI::ValidationError("--window", "must be at least --max-len + 1");
      }
      return cmd_alignment(pres, cfg);
    }

    Outcome cmd_obstruct(Presentation const& pres) {
      auto const cert = verify_obstruction(pres);
      Outcome    o;
      std::ostringstream text;
      json       steps = json::array();
      text << "n: " << cert.n << "\nstart: c a\n";
      for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        auto const& s = cert.steps[i];
        text << i + 1 << ". " << describe(s.move, pres) << ": "
             << format_group_word(s.before) << "  =>  "
             << format_group_word(s.after) << "\n";
        steps.push_back({{"index", i + 1},
                         {"move", describe(s.move, pres)},
                         {"before", format_group_word(s.before)},
                         {"after", format_group_word(s.after)}});
      }
      text << "in any group: c a = B1 C1\n"
           << "in the monoid: " << format_word(cert.source_nf.nf)
           << " != " << format_word(cert.target_nf.nf)
           << "\nverdict: not group-embeddable\n";
      o.text   = text.str();
      o.result = {{"steps", steps},
                  {"monoid_witness",
                   {format_word(cert.source_nf.nf),
                    format_word(cert.target_nf.nf)}},
                  {"verified", true}};
      return o;
    }

    void emit(Outcome const&     o,
              RunConfig const&   cfg,
              std::string const& command,
              Presentation const& pres,
              std::ostream&      out) {
      std::string payload;
      if (cfg.format == "json") {
        json doc = {{"command", command},
                    {"n", pres.n()},
                    {"result", o.result},
                    {"violations", o.violations}};
        payload = doc.dump(2) + "\n";
      } else {
        payload = o.text;
      }
      if (cfg.out_path.empty()) {
        out << payload;
      } else {
        std::ofstream file(cfg.out_path);
        if (!file) {
          throw MalcevError(ErrorKind::invalid_argument,
                            "cannot write " + cfg.out_path);
        }
        file << payload;
      }
    }

    int exit_code_for(ErrorKind kind) {
      switch (kind) {
        case ErrorKind::alignment_violation:
        case ErrorKind::cap_exceeded:
        case ErrorKind::occurrence_mismatch:
        case ErrorKind::broken_chain:
          return internal_error;
        default:
          return usage_error;
      }
    }

  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal forms, word problem, Cayley graphs and right-ideal "
                 "intersections for the Malcev monoids M_n"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub, bool allow_file) {
      sub->add_option("-n", cfg.n, "index n >= 1 of the monoid M_n")
          ->check(CLI::PositiveNumber);
      if (allow_file) {
        sub->add_option("--pres",
                        cfg.presentation_file,
                        "presentation file (\"w1 = w2\" per line) instead of -n");
      }
      sub->add_option("--format", cfg.format, "output format")
          ->check(CLI::IsMember({"text", "json"}));
      sub->add_option("--out", cfg.out_path, "write output to this file");
    };

    auto* gen = app.add_subcommand("gen", "print generators, relations and P/Q/L/R");
    add_common(gen, true);

    auto* nf = app.add_subcommand("nf", "left normal form of a word");
    add_common(nf, true);
    nf->add_option("-w", cfg.words, "word, e.g. \"d a\"; \"1\" is the identity")
        ->required();

    auto* eq = app.add_subcommand("eq", "decide whether two words are equal");
    add_common(eq, true);
    eq->add_option("-w", cfg.words, "word (give twice)")->required();

    auto* divides = app.add_subcommand("divides", "left divisibility of q by p");
    add_common(divides, true);
    divides->add_option("-p", cfg.p, "divisor")->required();
    divides->add_option("-q", cfg.q, "multiple")->required();

    auto* intersect = app.add_subcommand("intersect", "generators of pM ∩ qM");
    add_common(intersect, false);
    intersect->add_option("-p", cfg.p)->required();
    intersect->add_option("-q", cfg.q)->required();

    auto* ball = app.add_subcommand("ball", "ball in the right Cayley graph");
    add_common(ball, true);
    ball->add_option("--radius", cfg.radius)->required();
    ball->add_option("--root", cfg.root, "root element (default 1)");
    ball->add_option("--dot", cfg.dot_path, "write DOT to PATH ('-' for stdout)");

    auto* verify = app.add_subcommand("verify", "run a property suite");
    add_common(verify, false);
    verify->add_option("--suite", cfg.suite)
        ->required()
        ->check(CLI::IsMember(
            {"nf-oracle", "cancellative", "codet", "indegree", "alignment"}));
    verify->add_option("--max-len", cfg.max_length, "length bound L")->required();
    verify->add_option("--window", cfg.window, "oracle window W (default L + 3)");
    verify->add_option("--samples", cfg.samples, "oracle sample size S");
    verify->add_option("--seed", cfg.seed, "sampling seed (default $MALCEV_SEED)");

    auto* obstruct = app.add_subcommand("obstruct", "non-embeddability certificate");
    add_common(obstruct, false);

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? success : usage_error;
    }

    auto* sub = app.get_subcommands().front();
    try {
      auto const pres = cfg.presentation_file.empty()
                            ? Presentation::malcev(cfg.n)
                            : load_presentation(cfg.presentation_file);
      Outcome o;
      if (sub == gen) {
        o = cmd_gen(pres);
      } else if (sub == nf) {
        o = cmd_nf(pres, cfg);
      } else if (sub == eq) {
        o = cmd_eq(pres, cfg);
      } else if (sub == divides) {
        o = cmd_divides(pres, cfg);
      } else if (sub == intersect) {
        o = cmd_intersect(pres, cfg);
      } else if (sub == ball) {
        o = cmd_ball(pres, cfg);
      } else if (sub == verify) {
        o = cmd_verify(pres, cfg);
      } else {
        o = cmd_obstruct(pres);
      }
      emit(o, cfg, sub->get_name(), pres, out);
      return o.code;
    } catch (CLI::ValidationError const& e) {
      err << "error: " << e.what() << "\n";
      return usage_error;
    } catch (MalcevError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_code_for(e.kind());
    }
  }

}  // namespace malcev::cli
