#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "rainbow/constructions.hpp"
#include "rainbow/corpus.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extremal_search.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/lemma_verify.hpp"
#include "rainbow/rainbow_search.hpp"
#include "rainbow/rtg1.hpp"

namespace rainbow::cli {

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

ColoredGraph load(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") return read_rtg1(in);
  std::ifstream f(file);
  if (!f) throw PreconditionError("cannot open " + file);
  return read_rtg1(f);
}

void print_ids(std::ostream& out, const std::string& label, const std::vector<Vertex>& ids) {
  out << label << ':';
  for (auto v : ids) out << ' ' << v;
  out << '\n';
}

unsigned checked_jobs(unsigned jobs) {
  if (jobs == 0) throw PreconditionError("--jobs must be at least 1");
  return jobs;
}

// Each verb registers its options on `app` and returns the action to run once
// parsing succeeded.
using Action = std::function<int(Io&)>;

Action add_gen(CLI::App& app) {
  auto* gen = app.add_subcommand("gen", "Generate a colored graph in rtg1 format");
  gen->require_subcommand(1);

  auto l = std::make_shared<int>(0);
  auto n = std::make_shared<std::size_t>(0);
  auto m = std::make_shared<std::size_t>(0);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto which = std::make_shared<std::string>();

  auto* cube = gen->add_subcommand("folded-cube", "Folded cube D*_{2^(l-1)}");
  cube->add_option("--l", *l, "Path length l (>= 3)")->required();
  cube->callback([which] { *which = "folded-cube"; });

  auto* lower = gen->add_subcommand("lower-bound", "Disjoint folded cubes plus isolated vertices");
  lower->add_option("--n", *n, "Vertex count")->required();
  lower->add_option("--l", *l, "Path length l (>= 3)")->required();
  lower->callback([which] { *which = "lower-bound"; });

  auto* random = gen->add_subcommand("random", "Uniform m-edge graph, greedily properly colored");
  random->add_option("--n", *n, "Vertex count")->required();
  random->add_option("--m", *m, "Edge count")->required();
  random->add_option("--seed", *seed, "Generator seed")->default_val(0);
  random->callback([which] { *which = "random"; });

  return [=](Io& io) {
    ColoredGraph g;
    if (*which == "folded-cube") {
      g = build_folded_cube(*l);
    } else if (*which == "lower-bound") {
      g = build_lower_bound(*n, *l);
    } else {
      if (*m > *n * (*n - (*n > 0 ? 1 : 0)) / 2) {
        throw PreconditionError("--m exceeds n(n-1)/2");
      }
      std::mt19937_64 rng(*seed);
      const auto pairs = sample_pairs(*n, *m, rng);
      g = *greedy_color(*n, pairs, 0);
    }
    write_rtg1(io.out, g);
    return kExitOk;
  };
}

Action add_check(CLI::App& app) {
  auto* check = app.add_subcommand("check", "Look for a rainbow copy of a pattern");
  auto pattern = std::make_shared<std::string>();
  auto file = std::make_shared<std::string>();
  auto anchor = std::make_shared<std::optional<Vertex>>();
  auto role = std::make_shared<std::string>("member");
  auto maximal = std::make_shared<bool>(false);
  check->add_option("--pattern", *pattern, "P<l> or C<l>")->required();
  check->add_option("--anchor", *anchor, "Vertex the copy must contain");
  check->add_option("--role", *role, "Anchor role")
      ->check(CLI::IsMember({"endpoint", "member"}))
      ->needs(check->get_option("--anchor"));
  check->add_flag("--maximal", *maximal, "Also certify that no edge can be added");
  check->add_option("file", *file, "rtg1 input (default: stdin)");

  return [=](Io& io) {
    const auto p = Pattern::parse(*pattern);
    const auto g = load(*file, io.in);
    std::optional<Anchor> a;
    if (*anchor) {
      a = Anchor{**anchor, *role == "endpoint" ? AnchorRole::Endpoint : AnchorRole::Member};
    }
    if (const auto w = find_rainbow(g, p, a)) {
      io.out << format_witness(*w) << '\n';
      return kExitFound;
    }
    io.out << "free\n";
    if (!*maximal) return kExitOk;
    const auto cert = certify_maximal(g, p);
    if (cert.maximal) {
      io.out << "maximal\n";
      return kExitOk;
    }
    const auto& e = *cert.counterexample;
    io.out << "not maximal: addable edge " << e.u << ' ' << e.v << " color " << e.color << '\n';
    return kExitFound;
  };
}

Action add_count(CLI::App& app) {
  auto* count = app.add_subcommand("count", "Count rainbow copies of a pattern");
  auto pattern = std::make_shared<std::string>();
  auto file = std::make_shared<std::string>();
  auto jobs = std::make_shared<unsigned>(1);
  count->add_option("--pattern", *pattern, "P<l> or C<l>")->required();
  count->add_option("--jobs", *jobs, "Worker threads")->default_val(1);
  count->add_option("file", *file, "rtg1 input (default: stdin)");
  return [=](Io& io) {
    const auto p = Pattern::parse(*pattern);
    const auto g = load(*file, io.in);
    io.out << count_rainbow(g, p, checked_jobs(*jobs)) << '\n';
    return kExitOk;
  };
}

Action add_partition(CLI::App& app) {
  auto* part = app.add_subcommand("partition", "Split vertices by rainbow C5 membership");
  auto file = std::make_shared<std::string>();
  part->add_option("file", *file, "rtg1 input (default: stdin)");
  return [=](Io& io) {
    const auto parts = partition_by_rainbow_c5(load(*file, io.in));
    print_ids(io.out, "V'", parts.in_c5);
    print_ids(io.out, "V''", parts.out_c5);
    return kExitOk;
  };
}

void print_stats(std::ostream& out, const HarnessStats& s) {
  const double rejection =
      s.total_attempts == 0 ? 0.0
                            : 1.0 - static_cast<double>(s.instances) / static_cast<double>(s.total_attempts);
  out << "corpus instances=" << s.instances << " attempts=" << s.total_attempts
      << " rejection_rate=" << std::fixed << std::setprecision(4) << rejection << '\n'
      << "triggers nonempty_after_prune=" << s.nonempty_after_prune
      << " degree6_after_prune=" << s.with_degree6_after_prune
      << " with_qualifying_vertex=" << s.with_qualifying_vertex
      << " qualifying_vertices=" << s.qualifying_vertices << " pairings_found=" << s.pairings_found
      << " pairings_missing=" << s.pairings_missing << " reached_p3_gate=" << s.reached_p3_gate
      << " main_survivors=" << s.main_theorem_survivors << '\n';
}

Action add_verify(CLI::App& app) {
  auto* verify = app.add_subcommand("verify", "Run the lemma falsification checks");
  auto lemma = std::make_shared<std::string>("all");
  auto file = std::make_shared<std::string>();
  auto corpus = std::make_shared<std::size_t>(0);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto jobs = std::make_shared<unsigned>(1);
  auto min_n = std::make_shared<std::size_t>(CorpusOptions{}.min_vertices);
  auto max_n = std::make_shared<std::size_t>(CorpusOptions{}.max_vertices);
  auto sampler = std::make_shared<std::string>("rejection");
  verify->add_option("--lemma", *lemma, "all or one lemma id")->default_val("all");
  auto* corpus_opt = verify->add_option("--corpus", *corpus, "Run on N seeded random instances");
  verify->add_option("--seed", *seed, "Corpus seed")->default_val(0);
  verify->add_option("--jobs", *jobs, "Worker threads")->default_val(1);
  verify->add_option("--min-n", *min_n, "Smallest corpus vertex count")->needs(corpus_opt);
  verify->add_option("--max-n", *max_n, "Largest corpus vertex count")->needs(corpus_opt);
  verify->add_option("--sampler", *sampler, "Corpus sampler")
      ->check(CLI::IsMember({"rejection", "growth"}))
      ->needs(corpus_opt);
  verify->add_option("file", *file, "rtg1 input (default: stdin)")->excludes(corpus_opt);

  return [=](Io& io) {
    std::vector<LemmaId> ids;
    if (*lemma == "all") {
      ids.assign(all_lemmas().begin(), all_lemmas().end());
    } else if (const auto id = parse_lemma_id(*lemma)) {
      ids.push_back(*id);
    } else {
      std::string known;
      for (auto id : all_lemmas()) known += " " + std::string(lemma_name(id));
      throw PreconditionError("unknown lemma '" + *lemma + "' (known: all" + known + ")");
    }

    std::vector<LemmaReport> reports;
    if (*corpus > 0) {
      CorpusOptions opts;
      opts.seed = *seed;
      opts.instances = *corpus;
      opts.min_vertices = *min_n;
      opts.max_vertices = *max_n;
      opts.sampler = *sampler == "growth" ? Sampler::Growth : Sampler::Rejection;
      auto result = run_harness(opts, ids, checked_jobs(*jobs));
      for (const auto& r : result.reports) io.out << format_report(r) << '\n';
      print_stats(io.out, result.stats);
      reports = std::move(result.reports);
    } else {
      const auto g = load(*file, io.in);
      for (auto id : ids) {
        reports.push_back(run_lemma(id, g));
        io.out << format_report(reports.back()) << '\n';
      }
    }
    bool violation = false;
    for (const auto& r : reports) violation = violation || r.status == LemmaStatus::Violation;
    if (violation) return kExitFound;
    if (ids.size() == 1 && reports.front().status == LemmaStatus::DomainError) return kExitUsage;
    return kExitOk;
  };
}

Action add_search(CLI::App& app) {
  auto* search = app.add_subcommand("search", "Exact ex*(n, F) by exhaustive search");
  auto n = std::make_shared<std::size_t>(0);
  auto pattern = std::make_shared<std::string>();
  auto cap = std::make_shared<std::optional<std::size_t>>();
  auto force = std::make_shared<bool>(false);
  auto jobs = std::make_shared<unsigned>(1);
  search->add_option("--n", *n, "Vertex count")->required();
  search->add_option("--pattern", *pattern, "P<l> or C<l>")->required();
  search->add_option("--edge-cap", *cap, "Start the descent at this edge count");
  search->add_flag("--force", *force, "Lift the n > 8 guard (up to n = 11)");
  search->add_option("--jobs", *jobs, "Worker threads")->default_val(1);

  return [=](Io& io) {
    ExtremalOptions opts;
    opts.edge_cap = *cap;
    opts.force = *force;
    opts.jobs = checked_jobs(*jobs);
    const auto r = ex_star_exact(*n, Pattern::parse(*pattern), opts);
    io.out << "ex* n=" << r.n << " pattern=" << r.pattern.to_string() << " value=" << r.value
           << (r.capped ? " capped" : "") << '\n'
           << "stats graphs=" << r.stats.graphs_enumerated << " colorings=" << r.stats.coloring_searches
           << " nodes=" << r.stats.search_nodes << " seconds=" << std::fixed << std::setprecision(3)
           << r.stats.wall_seconds << '\n';
    write_rtg1(io.out, r.witness);
    return kExitOk;
  };
}

Action add_prune(CLI::App& app) {
  auto* prune = app.add_subcommand("prune", "Prune low degrees and drop light components");
  auto k = std::make_shared<std::optional<std::size_t>>();
  auto threshold = std::make_shared<std::optional<std::string>>();
  auto pre = std::make_shared<bool>(false);
  auto file = std::make_shared<std::string>();
  auto* k_opt = prune->add_option("--k", *k, "Delete vertices of degree < k until none remain");
  auto* t_opt = prune->add_option("--threshold", *threshold,
                                  "Then drop components with average degree <= threshold (p or p/q)");
  prune->add_flag("--preprocess", *pre, "Same as --k 3 --threshold 5")->excludes(k_opt)->excludes(t_opt);
  prune->add_option("file", *file, "rtg1 input (default: stdin)");

  return [=](Io& io) {
    if (!*pre && !*k && !*threshold) {
      throw PreconditionError("prune needs --k, --threshold or --preprocess");
    }
    auto g = load(*file, io.in);
    if (*pre) {
      g = preprocess(g);
    } else {
      if (*k) g = prune_min_degree(g, **k);
      if (*threshold) g = drop_light_components(g, parse_rational(**threshold));
    }
    write_rtg1(io.out, g);
    return kExitOk;
  };
}

Action add_bounds(CLI::App& app) {
  auto* bounds = app.add_subcommand("bounds", "Construction lower bound and proven upper bound");
  auto n = std::make_shared<std::int64_t>(0);
  auto l = std::make_shared<int>(0);
  bounds->add_option("--n", *n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  bounds->add_option("--l", *l, "Path length l (>= 3)")->required();
  return [=](Io& io) {
    const auto b = theoretical_bounds(*n, *l);
    io.out << "lower=" << to_string(b.lower) << " upper=" << to_string(b.upper) << '\n';
    return kExitOk;
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow path and cycle toolkit for properly edge-colored graphs", "rainbow"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, Action>> verbs = {
      {"gen", add_gen(app)},         {"check", add_check(app)},   {"count", add_count(app)},
      {"partition", add_partition(app)}, {"verify", add_verify(app)}, {"search", add_search(app)},
      {"prune", add_prune(app)},     {"bounds", add_bounds(app)},
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Io io{in, out, err};
  try {
    for (const auto& [name, action] : verbs) {
      if (app.got_subcommand(name)) return action(io);
    }
  } catch (const ParseError& e) {
    err << "error: rtg1 " << e.what() << '\n';
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace rainbow::cli
