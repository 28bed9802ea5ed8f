#include "support.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "corpex/cli.hpp"
#include "corpex/vertical.hpp"

namespace support {

namespace fs = std::filesystem;

fs::path data_path(const std::string& name) { return fs::path(CORPEX_TEST_DATA) / name; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::vector<corpex::ParsedDocument> fixture_docs() {
  std::ifstream in(data_path("fixture.vert"), std::ios::binary);
  return corpex::parse_vertical(in);
}

const corpex::Index& fixture_index() {
  static const corpex::Index index = corpex::build_index(fixture_docs(), 1);
  return index;
}

corpex::Scope fixture_focus() {
  const auto& index = fixture_index();
  std::vector<corpex::DocOrd> docs;
  for (corpex::DocOrd d = 0; d < index.doc_count(); ++d) {
    const auto& id = index.documents()[d].id;
    if (id == "d1" || id == "d2" || id == "d4") docs.push_back(d);
  }
  return corpex::Scope(index, docs);
}

oracle::Node to_oracle(const corpex::NodeSpec& node) {
  switch (node.kind) {
    case corpex::NodeKind::Lemma: return {oracle::Kind::Lemma, node.forms};
    case corpex::NodeKind::Bigram: return {oracle::Kind::Bigram, node.forms};
    case corpex::NodeKind::Initialism: return {oracle::Kind::Initialism, node.forms};
  }
  return {};
}

std::set<std::size_t> doc_set(const corpex::Scope& scope) {
  return {scope.docs().begin(), scope.docs().end()};
}

ScratchDir::ScratchDir() {
  static std::mt19937_64 rng(std::random_device{}());
  for (int attempt = 0; attempt < 100; ++attempt) {
    fs::path p = fs::temp_directory_path() / ("corpex-test-" + std::to_string(rng()));
    if (fs::create_directory(p)) {
      path_ = p;
      return;
    }
  }
  throw std::runtime_error("cannot create scratch directory");
}

ScratchDir::~ScratchDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

WorkingDir::WorkingDir(const fs::path& dir) : previous_(fs::current_path()) {
  fs::current_path(dir);
}

WorkingDir::~WorkingDir() {
  std::error_code ec;
  fs::current_path(previous_, ec);
}

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "corpex");
  std::ostringstream out, err;
  CliResult r;
  r.code = corpex::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string synthetic_vertical(std::size_t tokens, std::size_t docs, unsigned seed) {
  static const char* kTags[] = {"NOUN", "VERB", "ADJ", "ADP", "DET", "ADV", "PROPN"};
  std::mt19937 rng(seed);
  constexpr std::size_t kVocab = 20000;
  std::vector<double> weights(kVocab);
  for (std::size_t i = 0; i < kVocab; ++i) weights[i] = 1.0 / static_cast<double>(i + 1);
  std::discrete_distribution<std::size_t> zipf(weights.begin(), weights.end());
  std::uniform_int_distribution<int> sentence_len(5, 30);

  std::string out;
  out.reserve(tokens * 24);
  const std::size_t per_doc = tokens / docs;
  for (std::size_t d = 0; d < docs; ++d) {
    out += "<doc id=\"s" + std::to_string(d) + "\" source=\"synthetic\">\n";
    std::size_t left = d + 1 == docs ? tokens - per_doc * d : per_doc;
    while (left > 0) {
      out += "<s>\n";
      for (int n = sentence_len(rng); n > 0 && left > 0; --n, --left) {
        const std::size_t w = zipf(rng);
        const std::string lemma = "w" + std::to_string(w);
        out += (w % 11 == 0 ? "W" + std::to_string(w) : lemma);
        out += '\t';
        out += lemma;
        out += '\t';
        out += kTags[w % 7];
        out += '\n';
      }
      out += "</s>\n";
    }
    out += "</doc>\n";
  }
  return out;
}

}  // namespace support
