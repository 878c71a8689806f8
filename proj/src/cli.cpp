#include "ordifind/cli.hpp"

#include <charconv>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "ordifind/context.hpp"
#include "ordifind/document.hpp"
#include "ordifind/factorize.hpp"
#include "ordifind/lattice.hpp"
#include "ordifind/metrics.hpp"
#include "ordifind/server.hpp"

namespace ordifind {

namespace {

/// Malformed flag values detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Loaded {
  FormalContext ctx;
  Factorization factorization;
  std::optional<FactorizationDocument> document;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path == "-") {
    out << bytes;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << bytes;
}

LatticeOptions lattice_options() {
  LatticeOptions opts;
  if (const char* env = std::getenv("ORDIFIND_MAX_CONCEPTS")) {
    std::string_view text(env);
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), opts.max_concepts);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty())
      throw UsageError(std::string("invalid ORDIFIND_MAX_CONCEPTS value '") + env + "'");
  }
  return opts;
}

Algorithm parse_algorithm(const std::string& name) {
  return name == "naive" ? Algorithm::kNaive : Algorithm::kOrdiFind;
}

bool is_document_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

/// A context file is factorized on the fly; a .json document is used as is.
Loaded load_factorized(const std::string& path, Algorithm algorithm) {
  if (is_document_path(path)) {
    auto doc = import_document(read_file(path));
    auto ctx = document_context(doc);
    auto fact = document_factorization(doc);
    return {std::move(ctx), std::move(fact), std::move(doc)};
  }
  auto ctx = load_context(path);
  auto lat = build_lattice(ctx, lattice_options());
  auto fact = factorize(ctx, lat, algorithm);
  return {std::move(ctx), std::move(fact), std::nullopt};
}

Selection parse_selection(const std::string& spec, std::size_t num_factors) {
  Selection sel{std::vector<std::size_t>(num_factors, 0)};
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq < 2 || item[0] != 'f')
      throw UsageError("bad selection item '" + item + "', expected f<i>=<position>");
    std::size_t factor = 0;
    std::size_t pos = 0;
    try {
      std::size_t used = 0;
      factor = std::stoull(item.substr(1, eq - 1), &used);
      if (used != eq - 1) throw std::invalid_argument("");
      pos = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("bad selection item '" + item + "', expected f<i>=<position>");
    }
    if (factor == 0 || factor > num_factors)
      throw std::invalid_argument("selection names factor " + std::to_string(factor) + " but there are " +
                                  std::to_string(num_factors) + " factors");
    sel.positions[factor - 1] = pos;
  }
  return sel;
}

std::string format_selection(const Selection& sel) {
  std::string s;
  for (std::size_t i = 0; i < sel.positions.size(); ++i) {
    if (i) s += ',';
    s += 'f' + std::to_string(i + 1) + '=' + std::to_string(sel.positions[i]);
  }
  return s;
}

std::string join_names(const Bitset& b, const std::vector<std::string>& names) {
  std::string s;
  b.for_each([&](std::size_t i) {
    if (!s.empty()) s += ", ";
    s += names[i];
  });
  return s;
}

httplib::Server* g_running_server = nullptr;

extern "C" void stop_running_server(int) {
  if (g_running_server) g_running_server->stop();
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy ordinal factorization of binary data", "ordifind"};
  app.require_subcommand(1);

  std::string input;
  std::string algorithm = "ordifind";
  auto add_algorithm = [&](CLI::App* sub) {
    sub->add_option("--algorithm", algorithm, "Factorization algorithm")
        ->check(CLI::IsMember({"naive", "ordifind"}));
  };

  auto* fac = app.add_subcommand("factorize", "Compute a complete greedy ordinal factorization");
  std::string out_path;
  bool no_incidence = false;
  bool timing = false;
  fac->add_option("input", input, "Context file (.cxt or .csv)")->required();
  fac->add_option("--out", out_path, "Write the factorization document here ('-' for stdout)");
  fac->add_flag("--no-incidence", no_incidence, "Omit the incidence from the document");
  fac->add_flag("--timing", timing, "Report wall-clock times");
  add_algorithm(fac);

  auto* lat_cmd = app.add_subcommand("lattice", "Build the concept lattice");
  bool stats = false;
  std::string json_path;
  lat_cmd->add_option("input", input, "Context file (.cxt or .csv)")->required();
  lat_cmd->add_flag("--stats", stats, "Print concept and cover counts");
  lat_cmd->add_option("--json", json_path, "Dump concepts and covers as JSON ('-' for stdout)");

  auto* rank = app.add_subcommand("rank", "Rank objects by distance to a slider selection");
  std::string select;
  std::string object;
  rank->add_option("input", input, "Context file or factorization document (.json)")->required();
  auto* sel_opt = rank->add_option("--select", select, "Positions, e.g. f1=3,f2=0");
  rank->add_option("--object", object, "Use the positions supported by this object")
      ->excludes(sel_opt);
  add_algorithm(rank);

  auto* plot = app.add_subcommand("plot2d", "Object coordinates on the two largest factors");
  plot->add_option("input", input, "Context file or factorization document (.json)")->required();
  add_algorithm(plot);

  auto* serve = app.add_subcommand("serve", "Serve a factorization document and the UI over HTTP");
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string assets;
  serve->add_option("document", input, "Factorization document (.json)")->required();
  serve->add_option("--port", port, "Port, 0 picks a free one")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--assets", assets, "Directory with the UI bundle")->check(CLI::ExistingDirectory);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  try {
    const Algorithm algo = parse_algorithm(algorithm);
    using Clock = std::chrono::steady_clock;
    auto ms = [](Clock::duration d) {
      return std::chrono::duration<double, std::milli>(d).count();
    };

    if (fac->parsed()) {
      auto t0 = Clock::now();
      auto ctx = load_context(input);
      auto lat = build_lattice(ctx, lattice_options());
      auto t1 = Clock::now();
      auto fact = factorize(ctx, lat, algo);
      auto t2 = Clock::now();
      out << "concepts: " << lat.size() << "\n";
      out << "factors: " << fact.width() << "\n";
      for (std::size_t i = 0; i < fact.factors.size(); ++i) {
        const auto& f = fact.factors[i];
        out << "factor " << i + 1 << ": new_coverage=" << f.new_coverage << " size=" << f.size
            << " ticks=" << f.ticks.size() << "\n";
      }
      if (timing)
        out << "time: lattice " << ms(t1 - t0) << " ms, factorization " << ms(t2 - t1) << " ms\n";
      if (!out_path.empty())
        write_file(out_path, export_factorization(ctx, lat, fact, !no_incidence), out);
      return 0;
    }

    if (lat_cmd->parsed()) {
      auto ctx = load_context(input);
      auto lat = build_lattice(ctx, lattice_options());
      if (stats || json_path.empty()) {
        out << "concepts: " << lat.size() << "\n";
        out << "cover edges: " << lat.num_cover_edges() << "\n";
      }
      if (!json_path.empty()) write_file(json_path, lattice_to_json(ctx, lat), out);
      return 0;
    }

    if (rank->parsed()) {
      auto loaded = load_factorized(input, algo);
      Selection sel;
      if (!object.empty())
        sel = supported_positions(loaded.ctx, loaded.factorization,
                                  loaded.ctx.object_index(object));
      else
        sel = parse_selection(select, loaded.factorization.width());
      out << "# selection: " << format_selection(sel) << "\n";
      Bitset required(loaded.ctx.num_attributes());
      for (std::size_t i = 0; i < sel.positions.size() && i < loaded.factorization.width(); ++i)
        required |= cumulative_attributes(loaded.factorization.factors[i], sel.positions[i],
                                          loaded.ctx.num_attributes());
      out << "# required: " << join_names(required, loaded.ctx.attributes()) << "\n";
      for (const auto& r : rank_objects(loaded.ctx, loaded.factorization, sel))
        out << r.distance << "\t" << loaded.ctx.objects()[r.object] << "\n";
      return 0;
    }

    if (plot->parsed()) {
      auto loaded = load_factorized(input, algo);
      out << "object,x,y\n";
      for (const auto& p : plot2d(loaded.ctx, loaded.factorization))
        out << p.object << "," << p.x << "," << p.y << "\n";
      return 0;
    }

    if (serve->parsed()) {
      std::string bytes = read_file(input);
      import_document(bytes);  // validate before serving
      auto server = make_server(std::move(bytes),
                                assets.empty() ? std::nullopt : std::optional<std::string>(assets));
      int bound = port == 0 ? server->bind_to_any_port(host) : (server->bind_to_port(host, port) ? port : -1);
      if (bound < 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
      out << "serving on http://" << host << ":" << bound << "/" << std::endl;
      g_running_server = server.get();
      auto previous_int = std::signal(SIGINT, stop_running_server);
      auto previous_term = std::signal(SIGTERM, stop_running_server);
      server->listen_after_bind();
      std::signal(SIGINT, previous_int);
      std::signal(SIGTERM, previous_term);
      g_running_server = nullptr;
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ordifind
