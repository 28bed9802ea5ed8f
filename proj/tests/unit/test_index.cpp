#include <cstring>
#include <random>

#include "doctest.h"

#include "corpex/error.hpp"
#include "corpex/index.hpp"
#include "support.hpp"

using namespace corpex;

namespace {

Errc load_error(std::string_view bytes) {
  try {
    (void)deserialize_index(bytes);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("loaded");
  return Errc::Io;
}

ParsedDocument doc(const std::string& id, std::vector<std::string> lemmas) {
  ParsedDocument d;
  d.meta.id = id;
  for (auto& l : lemmas) d.tokens.push_back({l, l, Pos::NOUN, 0});
  if (!d.tokens.empty()) d.sentence_starts.push_back(0);
  return d;
}

}  // namespace

TEST_CASE("fixture index agrees with a scan of the parsed tokens") {
  const auto docs = support::fixture_docs();
  const auto flat = oracle::flatten(docs);
  const Index& index = support::fixture_index();
  REQUIRE(index.token_count() == flat.size());
  CHECK(index.doc_count() == 6);

  const auto lemmas = index.lemmas().strings();
  CHECK(std::is_sorted(lemmas.begin(), lemmas.end()));
  CHECK(std::adjacent_find(lemmas.begin(), lemmas.end()) == lemmas.end());

  for (Position p = 0; p < flat.size(); ++p) {
    CHECK(index.lemmas().at(index.lemma_at(p)) == flat[p].lemma);
    CHECK(index.surfaces().at(index.surface_at(p)) == flat[p].surface);
    CHECK(index.pos_at(p) == flat[p].pos);
    CHECK(index.doc_of(p) == flat[p].doc);
    CHECK(index.sentence_starts_at(p) == (p == 0 || flat[p - 1].sentence != flat[p].sentence));
  }
  for (LexId id = 0; id < index.lemmas().size(); ++id) {
    std::vector<Position> expect;
    for (Position p = 0; p < flat.size(); ++p) {
      if (flat[p].lemma == index.lemmas().at(id)) expect.push_back(p);
    }
    const PostingList& pl = index.lemma_postings(id);
    CHECK(pl.positions == expect);
    std::size_t covered = 0;
    for (const auto& run : pl.runs) {
      for (std::size_t k = covered; k < covered + run.count; ++k) {
        CHECK(flat[pl.positions[k]].doc == run.doc);
      }
      covered += run.count;
    }
    CHECK(covered == expect.size());
  }
  for (LexId id = 0; id < index.surfaces().size(); ++id) {
    std::size_t n = 0;
    for (const auto& t : flat) n += t.surface == index.surfaces().at(id);
    CHECK(index.surface_postings(id).positions.size() == n);
  }
}

TEST_CASE("lemmas are folded and surfaces kept") {
  const Index idx = build_index({doc("a", {"VR", "vr", "Vr"})}, 1);
  CHECK(idx.lemmas().size() == 1);
  CHECK(idx.surfaces().size() == 3);
  CHECK(idx.lemma_postings(*idx.lemmas().find("vr")).positions.size() == 3);
  CHECK_FALSE(idx.lemmas().find("VR").has_value());
}

TEST_CASE("build is independent of thread count") {
  const auto docs = support::fixture_docs();
  const std::string one = serialize_index(build_index(docs, 1));
  for (unsigned t : {2u, 3u, 8u, 0u}) {
    CHECK(serialize_index(build_index(docs, t)) == one);
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    auto random = oracle::random_corpus(rng, 2000);
    if (oracle::flatten(random).empty()) continue;
    CHECK(build_index(random, 1) == build_index(random, 1 + i % 7));
  }
}

TEST_CASE("empty documents are dropped and positions renumbered") {
  const Index idx = build_index({doc("a", {}), doc("b", {"x", "y"}), doc("c", {}),
                                 doc("d", {"x"})}, 2);
  REQUIRE(idx.doc_count() == 2);
  CHECK(idx.documents()[0].id == "b");
  CHECK(idx.documents()[1].range.begin == 2);
  CHECK(idx.documents()[1].range.end == 3);
  CHECK(idx.doc_of(2) == 1);
}

TEST_CASE("build errors") {
  try {
    build_index({doc("a", {}), doc("b", {})}, 1);
    FAIL("built");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyCorpus);
  }
  try {
    build_index({}, 1);
    FAIL("built");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyCorpus);
  }
  try {
    build_index({doc("a", {"x"}), doc("a", {"y"})}, 1);
    FAIL("built");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateDocId);
  }
}

TEST_CASE("index codec round trip") {
  const Index& index = support::fixture_index();
  const std::string bytes = serialize_index(index);
  CHECK(bytes.substr(0, 8) == "CORPEXIX");
  CHECK(deserialize_index(bytes) == index);

  support::ScratchDir dir;
  save_index(index, dir.path() / "f.cx");
  CHECK(load_index(dir.path() / "f.cx") == index);
  CHECK(support::read_file(dir.path() / "f.cx") == bytes);
}

TEST_CASE("index codec rejects damaged files") {
  const std::string bytes = serialize_index(support::fixture_index());
  std::string bad = bytes;
  bad[0] = 'X';
  CHECK(load_error(bad) == Errc::BadMagic);
  bad = bytes;
  bad[8] = static_cast<char>(bad[8] + 1);
  CHECK(load_error(bad) == Errc::VersionMismatch);
  CHECK(load_error(bytes + '\0') == Errc::CorruptFile);
  CHECK(load_error("") == Errc::TruncatedFile);
  CHECK(load_error("CORP") == Errc::TruncatedFile);

  for (std::size_t len = 0; len < bytes.size(); ++len) {
    CHECK(load_error(std::string_view(bytes).substr(0, len)) == Errc::TruncatedFile);
  }

  // Flipped bytes must never crash; they either load or raise a codec error.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    std::string damaged = bytes;
    damaged[8 + rng() % (damaged.size() - 8)] ^= static_cast<char>(1 + rng() % 255);
    try {
      (void)deserialize_index(damaged);
    } catch (const Error& e) {
      CHECK((e.code() == Errc::CorruptFile || e.code() == Errc::TruncatedFile ||
             e.code() == Errc::VersionMismatch));
    }
  }

  try {
    (void)load_index("/nonexistent/corpex.cx");
    FAIL("loaded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Io);
  }
}

TEST_CASE("index validation") {
  IndexData d = support::fixture_index().data();
  SUBCASE("unsorted lexicon") {
    CHECK_THROWS_AS(Lexicon({"b", "a"}), Error);
  }
  SUBCASE("posting out of order") {
    auto& pl = d.lemma_postings[0];
    if (pl.positions.size() >= 2) std::swap(pl.positions[0], pl.positions[1]);
    else pl.positions.push_back(0);
    CHECK_THROWS_AS(Index{d}, Error);
  }
  SUBCASE("forward store length") {
    d.tags.pop_back();
    CHECK_THROWS_AS(Index{d}, Error);
  }
  SUBCASE("lemma id out of range") {
    d.lemma_ids[3] = static_cast<LexId>(d.lemmas.size());
    CHECK_THROWS_AS(Index{d}, Error);
  }
}
