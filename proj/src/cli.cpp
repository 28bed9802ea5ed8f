#include "corpex/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "corpex/colloc.hpp"
#include "corpex/digest.hpp"
#include "corpex/error.hpp"
#include "corpex/freq_stats.hpp"
#include "corpex/index.hpp"
#include "corpex/keyness.hpp"
#include "corpex/network.hpp"
#include "corpex/parallel.hpp"
#include "corpex/report.hpp"
#include "corpex/scope.hpp"
#include "corpex/sketch.hpp"
#include "corpex/tokenize.hpp"
#include "corpex/vertical.hpp"

namespace corpex::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Effective parameters of one run. Values come from defaults, then the
/// JSON config file, then explicit flags.
struct RunConfig {
  std::vector<std::string> inputs;
  std::string index;
  std::string out;
  std::string scope;
  std::string query;
  std::string preset;
  std::string node;
  std::string node_kind = "lemma";
  std::string pos_map;
  std::string format;
  std::string relation_source;
  std::string relations = "all";
  double smoothing = 1.0;
  unsigned window = 5;
  std::uint64_t min_freq = 5;
  std::uint64_t min_cof = 5;
  std::size_t top = 15;
  bool include_punct = false;
  bool include_num = false;
  unsigned threads = 0;
  bool seed_order = false;
  std::uint64_t seed = 1;
  std::string config;
};

/// How one config key is read from JSON and echoed back.
struct Field {
  std::function<void(RunConfig&, const json&)> load;
  std::function<json(const RunConfig&)> dump;
};

template <class T>
Field field(T RunConfig::*member) {
  return {[member](RunConfig& c, const json& j) { c.*member = j.get<T>(); },
          [member](const RunConfig& c) { return json(c.*member); }};
}

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> f = {
      {"inputs", field(&RunConfig::inputs)},
      {"index", field(&RunConfig::index)},
      {"out", field(&RunConfig::out)},
      {"scope", field(&RunConfig::scope)},
      {"query", field(&RunConfig::query)},
      {"preset", field(&RunConfig::preset)},
      {"node", field(&RunConfig::node)},
      {"node_kind", field(&RunConfig::node_kind)},
      {"pos_map", field(&RunConfig::pos_map)},
      {"format", field(&RunConfig::format)},
      {"relation_source", field(&RunConfig::relation_source)},
      {"relations", field(&RunConfig::relations)},
      {"smoothing", field(&RunConfig::smoothing)},
      {"window", field(&RunConfig::window)},
      {"min_freq", field(&RunConfig::min_freq)},
      {"min_cof", field(&RunConfig::min_cof)},
      {"top", field(&RunConfig::top)},
      {"include_punct", field(&RunConfig::include_punct)},
      {"include_num", field(&RunConfig::include_num)},
      {"threads", field(&RunConfig::threads)},
      {"seed_order", field(&RunConfig::seed_order)},
      {"seed", field(&RunConfig::seed)},
  };
  return f;
}

/// Keys that change how a run executes but never what it outputs.
bool echoed(const std::string& key) {
  return key != "out" && key != "threads" && key != "seed_order" && key != "seed" &&
         key != "config";
}

std::string key_of(const CLI::Option* opt) {
  std::string name = opt->get_name(false, true);
  if (name.starts_with("--")) name = name.substr(2);
  std::replace(name.begin(), name.end(), '-', '_');
  return name;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Fills every option of `sub` not given on the command line from the JSON
/// config file, if one is named by --config or CORPEX_CONFIG.
void apply_config_file(CLI::App& sub, RunConfig& cfg) {
  std::string path = cfg.config;
  if (path.empty()) {
    if (const char* env = std::getenv("CORPEX_CONFIG"); env && *env) path = env;
  }
  if (path.empty()) return;
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file " + path + " is not a JSON object");
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string key = key_of(opt);
    if (opt->count() > 0 || !j.contains(key)) continue;
    const auto it = fields().find(key);
    if (it == fields().end()) continue;
    try {
      it->second.load(cfg, j.at(key));
    } catch (const json::exception& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

std::string effective_config(CLI::App& sub, const RunConfig& cfg) {
  json j = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string key = key_of(opt);
    if (!echoed(key)) continue;
    if (const auto it = fields().find(key); it != fields().end()) {
      j[key] = it->second.dump(cfg);
    }
  }
  return j.dump();
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(Errc::Io, "cannot write " + cfg.out);
  f << text;
  if (!f) throw Error(Errc::Io, "write failed for " + cfg.out);
}

std::vector<std::string> collect_inputs(const std::vector<std::string>& args) {
  std::vector<std::string> files;
  const auto wanted = [](const fs::path& p) {
    return p.extension() == ".vert" || p.extension() == ".txt";
  };
  for (const auto& a : args) {
    const fs::path p(a);
    if (fs::is_directory(p)) {
      for (const auto& e : fs::recursive_directory_iterator(p)) {
        if (e.is_regular_file() && wanted(e.path())) files.push_back(e.path().string());
      }
    } else if (fs::exists(p)) {
      if (!wanted(p)) throw UsageError("unsupported input extension: " + a);
      files.push_back(p.string());
    } else {
      throw Error(Errc::Io, "no such input: " + a);
    }
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

std::vector<ParsedDocument> parse_file(const std::string& path, const PosMap& pos_map) {
  const fs::path p(path);
  if (p.extension() == ".vert") {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(Errc::Io, "cannot read " + path);
    try {
      return parse_vertical(in, pos_map);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what(), e.location());
    }
  }
  Document meta;
  meta.id = p.stem().string();
  meta.source = p.filename().string();
  return {tokenize_plain(read_file(path), std::move(meta))};
}

int cmd_index(const RunConfig& cfg, std::ostream& err) {
  if (cfg.out.empty()) throw UsageError("index needs --out");
  const auto files = collect_inputs(cfg.inputs);
  if (files.empty()) throw Error(Errc::EmptyCorpus, "no .vert or .txt inputs");

  PosMap pos_map = PosMap::standard();
  if (!cfg.pos_map.empty()) {
    std::ifstream in(cfg.pos_map);
    if (!in) throw Error(Errc::Io, "cannot read " + cfg.pos_map);
    pos_map.extend(in);
  }

  // Files are parsed concurrently, optionally in a shuffled order, and
  // always merged in sorted path order.
  std::vector<std::size_t> order(files.size());
  std::iota(order.begin(), order.end(), 0);
  if (cfg.seed_order) {
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::vector<std::vector<ParsedDocument>> parsed(files.size());
  parallel_chunks(files.size(), cfg.threads,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      parsed[order[i]] = parse_file(files[order[i]], pos_map);
                    }
                  });
  std::vector<ParsedDocument> docs;
  for (auto& p : parsed) {
    for (auto& d : p) docs.push_back(std::move(d));
  }
  const Index index = build_index(std::move(docs), cfg.threads);
  save_index(index, cfg.out);
  err << "indexed " << files.size() << " file(s): " << index.doc_count()
      << " documents, " << index.token_count() << " tokens, "
      << index.lemmas().size() << " lemmas\n";
  return kExitOk;
}

std::string resolve_query(const RunConfig& cfg) {
  if (!cfg.preset.empty()) {
    if (cfg.preset != "vr-anxiety") throw UsageError("unknown preset '" + cfg.preset + "'");
    if (!cfg.query.empty()) throw UsageError("--query and --preset are exclusive");
    return std::string(kVrAnxietyPreset);
  }
  return cfg.query;
}

struct Loaded {
  Index index;
  std::vector<InputDigest> digests;
};

Loaded load(const RunConfig& cfg) {
  if (cfg.index.empty()) throw UsageError("--index is required");
  Loaded l{load_index(cfg.index), {}};
  l.digests.push_back({cfg.index, sha256_file(cfg.index)});
  if (!cfg.scope.empty()) l.digests.push_back({cfg.scope, sha256_file(cfg.scope)});
  return l;
}

/// With --seed-order the member list reaches Scope in shuffled order.
Scope reorder(const RunConfig& cfg, const Scope& scope) {
  if (!cfg.seed_order) return scope;
  std::vector<DocOrd> docs(scope.docs().begin(), scope.docs().end());
  std::mt19937_64 rng(cfg.seed);
  std::shuffle(docs.begin(), docs.end(), rng);
  return Scope(scope.index(), std::move(docs));
}

/// The focus scope named by --scope, --query or --preset; nullopt when none
/// is given.
std::optional<Scope> focus_scope(const RunConfig& cfg, const Index& index) {
  const std::string query = resolve_query(cfg);
  if (!cfg.scope.empty()) {
    if (!query.empty()) throw UsageError("--scope excludes --query/--preset");
    std::ifstream in(cfg.scope);
    if (!in) throw Error(Errc::Io, "cannot read " + cfg.scope);
    return reorder(cfg, read_scope(in, index));
  }
  if (!query.empty()) return reorder(cfg, select_scope(index, query));
  return std::nullopt;
}

NodeSpec node_of(const RunConfig& cfg) {
  if (cfg.node.empty()) throw UsageError("--node is required");
  return make_node(cfg.node, parse_node_kind(cfg.node_kind));
}

ReportFormat report_format(const RunConfig& cfg) {
  return parse_report_format(cfg.format.empty() ? "tsv" : cfg.format);
}

RelationSet relation_set(const RunConfig& cfg) {
  if (cfg.relations == "all") return kAllRelations;
  if (cfg.relations == "prep") return kPrepRelations;
  throw UsageError("--relations must be 'all' or 'prep'");
}

int cmd_subcorpus(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string query = resolve_query(cfg);
  if (query.empty()) throw UsageError("subcorpus needs --query or --preset");
  const Query parsed = parse_query(query);
  if (cfg.index.empty()) throw UsageError("--index is required");
  const Index index = load_index(cfg.index);
  const Scope scope(index, evaluate_query(index, parsed));
  if (scope.empty()) {
    err << "warning: EmptyScope: no document matches " << to_string(parsed) << "\n";
  } else {
    err << "selected " << scope.doc_count() << " of " << index.doc_count()
        << " documents, " << scope.token_count() << " tokens\n";
  }
  std::ostringstream s;
  write_scope(s, scope);
  write_output(cfg, s.str(), out);
  return kExitOk;
}

int cmd_keywords(const RunConfig& cfg, const ReportHeader& header, std::ostream& out) {
  const Loaded l = load(cfg);
  const auto focus = focus_scope(cfg, l.index);
  const Scope scope = focus ? *focus : Scope::whole(l.index);
  KeywordOptions opts;
  opts.smoothing = cfg.smoothing;
  opts.top = cfg.top;
  opts.min_f = cfg.min_freq;
  opts.threads = cfg.threads;
  ReportHeader h = header;
  h.inputs = l.digests;
  write_output(cfg, render_keywords(keywords(scope, opts), report_format(cfg), h), out);
  return kExitOk;
}

RelationSource relation_source(const RunConfig& cfg, RelationSource fallback) {
  if (cfg.relation_source.empty()) return fallback;
  if (cfg.relation_source == "window") return RelationSource::Window;
  if (cfg.relation_source == "sketch") return RelationSource::Sketch;
  throw UsageError("--relation-source must be 'window' or 'sketch'");
}

CollocateOptions collocate_options(const RunConfig& cfg, RelationSource source) {
  CollocateOptions o;
  o.source = source;
  o.window = cfg.window;
  o.min_cof = cfg.min_cof;
  o.top = cfg.top;
  o.include_punct = cfg.include_punct;
  o.include_num = cfg.include_num;
  o.threads = cfg.threads;
  return o;
}

int cmd_collocates(const RunConfig& cfg, const ReportHeader& header, std::ostream& out) {
  if (cfg.window < 1) throw UsageError("--window must be at least 1");
  const Loaded l = load(cfg);
  const auto focus = focus_scope(cfg, l.index);
  const Scope scope = focus ? *focus : Scope::whole(l.index);
  const NodeSpec node = node_of(cfg);
  const auto rows = collocates(
      scope, node, collocate_options(cfg, relation_source(cfg, RelationSource::Window)));
  ReportHeader h = header;
  h.inputs = l.digests;
  write_output(cfg, render_collocates(rows, node, report_format(cfg), h), out);
  return kExitOk;
}

Sketch run_sketch(const RunConfig& cfg, const Scope& scope, const NodeSpec& node) {
  SketchOptions o;
  o.top = cfg.top;
  o.relations = relation_set(cfg);
  o.threads = cfg.threads;
  return sketch(scope, node, o);
}

int cmd_sketch(const RunConfig& cfg, const ReportHeader& header, std::ostream& out) {
  const Loaded l = load(cfg);
  const auto focus = focus_scope(cfg, l.index);
  const Scope scope = focus ? *focus : Scope::whole(l.index);
  const NodeSpec node = node_of(cfg);
  ReportHeader h = header;
  h.inputs = l.digests;
  write_output(cfg, render_sketch(run_sketch(cfg, scope, node), report_format(cfg), h),
               out);
  return kExitOk;
}

int cmd_network(const RunConfig& cfg, const ReportHeader& header, std::ostream& out) {
  const GraphFormat format = parse_graph_format(cfg.format.empty() ? "dot" : cfg.format);
  const Loaded l = load(cfg);
  const auto focus = focus_scope(cfg, l.index);
  const Scope scope = focus ? *focus : Scope::whole(l.index);
  const NodeSpec node = node_of(cfg);

  std::vector<RelationTable> tables;
  if (relation_source(cfg, RelationSource::Sketch) == RelationSource::Sketch) {
    tables = run_sketch(cfg, scope, node).tables;
  } else {
    tables.push_back(
        {"window", collocates(scope, node, collocate_options(cfg, RelationSource::Window))});
  }
  const WordNetwork net = build_network(node, tables, cfg.top);

  std::string text;
  if (format == GraphFormat::Dot) {
    text += fmt::format("// corpex {}\n// command: {}\n// config: {}\n", kToolVersion,
                        header.command, header.config_json);
    for (const auto& d : l.digests) {
      text += fmt::format("// input: {} sha256:{}\n", d.name, d.sha256);
    }
  }
  text += emit_graph(net, format);
  write_output(cfg, text, out);
  return kExitOk;
}

int cmd_stats(const RunConfig& cfg, const ReportHeader& header, std::ostream& out) {
  const Loaded l = load(cfg);
  const auto focus = focus_scope(cfg, l.index);
  const NodeSpec node = node_of(cfg);
  std::vector<std::pair<std::string, FreqProfile>> profiles;
  if (focus) {
    profiles.emplace_back("focus", profile(*focus, node));
    profiles.emplace_back("reference",
                          profile(complement_scope(l.index, *focus), node));
  } else {
    profiles.emplace_back("corpus", profile(Scope::whole(l.index), node));
  }
  ReportHeader h = header;
  h.inputs = l.digests;
  write_output(cfg, render_profiles(node, profiles, report_format(cfg), h), out);
  return kExitOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::BadArity:
    case Errc::NonAlphabetic:
    case Errc::UnknownFormat:
    case Errc::QuerySyntax:
    case Errc::BadSmoothing:
    case Errc::EmptyCorpus:
      return kExitUsage;
    default:
      return kExitData;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"corpex: corpus indexing, keyness, collocation and word sketches"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  RunConfig cfg;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", cfg.config, "JSON config file (default: $CORPEX_CONFIG)");
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    sub->add_option("-o,--out", cfg.out, "Write output here instead of stdout");
  };
  const auto analysis = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--index", cfg.index, "Index file");
    sub->add_option("--scope", cfg.scope, "Focus scope file");
    sub->add_option("--query", cfg.query, "Focus query");
    sub->add_option("--preset", cfg.preset, "Named focus query (vr-anxiety)");
    sub->add_flag("--seed-order", cfg.seed_order, "Shuffle internal work order");
  };
  const auto node_opts = [&](CLI::App* sub) {
    sub->add_option("--node", cfg.node, "Node word, bigram or initialism");
    sub->add_option("--node-kind", cfg.node_kind, "lemma | bigram | initialism");
  };

  auto* index = app.add_subcommand("index", "Parse .vert/.txt inputs and build an index");
  common(index);
  index->add_option("inputs", cfg.inputs, "Files or directories");
  index->add_option("--pos-map", cfg.pos_map, "Extra TAG<TAB>COARSE mappings");
  index->add_flag("--seed-order", cfg.seed_order, "Parse files in a shuffled order");
  index->add_option("--seed", cfg.seed, "Shuffle seed for --seed-order");

  auto* subcorpus = app.add_subcommand("subcorpus", "Select a focus scope by query");
  common(subcorpus);
  subcorpus->add_option("--index", cfg.index, "Index file");
  subcorpus->add_option("--query", cfg.query, "Boolean query");
  subcorpus->add_option("--preset", cfg.preset, "Named query (vr-anxiety)");

  auto* kw = app.add_subcommand("keywords", "Simple Maths keyness of the focus scope");
  analysis(kw);
  kw->add_option("--top", cfg.top, "Rows to report");
  kw->add_option("--smoothing", cfg.smoothing, "Simple Maths constant k");
  kw->add_option("--min-freq", cfg.min_freq, "Minimum focus frequency");
  kw->add_option("--format", cfg.format, "tsv | text | json");

  auto* coll = app.add_subcommand("collocates", "logDice collocates of a node");
  analysis(coll);
  node_opts(coll);
  coll->add_option("--window", cfg.window, "Window span in tokens");
  coll->add_option("--min-cof", cfg.min_cof, "Minimum co-occurrence count");
  coll->add_option("--top", cfg.top, "Rows to report");
  coll->add_option("--relation-source", cfg.relation_source, "window | sketch");
  coll->add_flag("--include-punct", cfg.include_punct, "Count punctuation");
  coll->add_flag("--include-num", cfg.include_num, "Count numerals");
  coll->add_option("--format", cfg.format, "tsv | text | json");

  auto* sk = app.add_subcommand("sketch", "Grammatical-relation collocate tables");
  analysis(sk);
  node_opts(sk);
  sk->add_option("--top", cfg.top, "Rows per table");
  sk->add_option("--relations", cfg.relations, "all | prep");
  sk->add_option("--format", cfg.format, "tsv | text | json");

  auto* net = app.add_subcommand("network", "Export the node's word network");
  analysis(net);
  node_opts(net);
  net->add_option("--top", cfg.top, "Collocates per relation");
  net->add_option("--relation-source", cfg.relation_source, "sketch | window");
  net->add_option("--relations", cfg.relations, "all | prep");
  net->add_option("--window", cfg.window, "Window span (window source)");
  net->add_option("--min-cof", cfg.min_cof, "Minimum co-occurrence (window source)");
  net->add_option("--format", cfg.format, "dot | json");

  auto* stats = app.add_subcommand("stats", "Frequency and dispersion of a node");
  analysis(stats);
  node_opts(stats);
  stats->add_option("--format", cfg.format, "tsv | text | json");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    apply_config_file(*sub, cfg);
    const std::string& cmd = sub->get_name();
    if (cfg.format.empty()) cfg.format = cmd == "network" ? "dot" : "tsv";
    if (cfg.relation_source.empty()) {
      cfg.relation_source = cmd == "network" ? "sketch" : "window";
    }
    ReportHeader header;
    header.command = sub->get_name();
    header.config_json = effective_config(*sub, cfg);

    const std::string name = sub->get_name();
    if (name == "index") return cmd_index(cfg, err);
    if (name == "subcorpus") return cmd_subcorpus(cfg, out, err);
    if (name == "keywords") return cmd_keywords(cfg, header, out);
    if (name == "collocates") return cmd_collocates(cfg, header, out);
    if (name == "sketch") return cmd_sketch(cfg, header, out);
    if (name == "network") return cmd_network(cfg, header, out);
    if (name == "stats") return cmd_stats(cfg, header, out);
    throw UsageError("unknown command " + name);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.location()) {
      err << (e.code() == Errc::QuerySyntax ? " (offset " : " (line ") << *e.location()
          << ")";
    }
    err << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace corpex::cli
