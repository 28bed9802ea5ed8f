// Index file layout (all integers little-endian):
//
//   "CORPEXIX"  u32 version
//   lexicon     u64 count, then count × (u32 length, bytes)   [lemmas]
//   lexicon                                                    [surfaces]
//   documents   u64 count, then count × (id, source, u8 has_date, [date],
//               u64 begin, u64 end)
//   forward     u64 n, n × u32 lemma id, n × u32 surface id, n × u8 tag,
//               u64 sentence count, sentence starts as delta varints
//   postings    per lemma, then per surface: varint run count,
//               runs as (varint doc delta, varint count),
//               positions as delta varints

#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "corpex/error.hpp"
#include "corpex/index.hpp"

namespace corpex {

namespace {

constexpr char kMagic[8] = {'C', 'O', 'R', 'P', 'E', 'X', 'I', 'X'};
constexpr std::uint32_t kVersion = 1;

class Writer {
 public:
  void bytes(const void* p, std::size_t n) {
    out_.append(static_cast<const char*>(p), n);
  }
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void varint(std::uint64_t v) {
    while (v >= 0x80) {
      u8(static_cast<std::uint8_t>(v | 0x80));
      v >>= 7;
    }
    u8(static_cast<std::uint8_t>(v));
  }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    bytes(s.data(), s.size());
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::size_t remaining() const noexcept { return in_.size() - at_; }

  void need(std::size_t n) const {
    if (remaining() < n) throw Error(Errc::TruncatedFile, "index file ends early");
  }
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(in_[at_++]);
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{u8()} << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{u8()} << (8 * i);
    return v;
  }
  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      const std::uint8_t b = u8();
      v |= std::uint64_t{b & 0x7Fu} << shift;
      if ((b & 0x80) == 0) return v;
    }
    throw Error(Errc::CorruptFile, "varint overflow");
  }
  std::string str() {
    const std::uint32_t n = u32();
    need(n);
    std::string s(in_.substr(at_, n));
    at_ += n;
    return s;
  }
  /// Element counts are bounded by the bytes left so corrupt headers cannot
  /// trigger huge allocations.
  std::uint64_t count(std::size_t min_bytes_each) {
    const std::uint64_t n = u64();
    if (min_bytes_each > 0 && n > remaining() / min_bytes_each) {
      throw Error(Errc::TruncatedFile, "index section shorter than its count");
    }
    return n;
  }

 private:
  std::string_view in_;
  std::size_t at_ = 0;
};

void write_lexicon(Writer& w, const Lexicon& lex) {
  w.u64(lex.size());
  for (const auto& s : lex.strings()) w.str(s);
}

Lexicon read_lexicon(Reader& r) {
  const auto n = r.count(4);
  std::vector<std::string> strings;
  strings.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) strings.push_back(r.str());
  return Lexicon(std::move(strings));
}

void write_postings(Writer& w, const std::vector<PostingList>& lists) {
  for (const auto& pl : lists) {
    w.varint(pl.runs.size());
    DocOrd prev_doc = 0;
    for (const auto& run : pl.runs) {
      w.varint(run.doc - prev_doc);
      w.varint(run.count);
      prev_doc = run.doc;
    }
    Position prev = 0;
    for (Position p : pl.positions) {
      w.varint(p - prev);
      prev = p;
    }
  }
}

std::vector<PostingList> read_postings(Reader& r, std::size_t lists) {
  std::vector<PostingList> out(lists);
  for (auto& pl : out) {
    const auto runs = r.varint();
    if (runs > r.remaining() / 2) {
      throw Error(Errc::TruncatedFile, "posting runs exceed file");
    }
    pl.runs.reserve(runs);
    std::uint64_t doc = 0;
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < runs; ++i) {
      doc += r.varint();
      const auto count = r.varint();
      if (doc > UINT32_MAX || count > UINT32_MAX) {
        throw Error(Errc::CorruptFile, "posting run out of range");
      }
      pl.runs.push_back({static_cast<DocOrd>(doc), static_cast<std::uint32_t>(count)});
      total += count;
    }
    if (total > r.remaining()) {
      throw Error(Errc::TruncatedFile, "posting positions exceed file");
    }
    pl.positions.reserve(total);
    Position p = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
      p += r.varint();
      pl.positions.push_back(p);
    }
  }
  return out;
}

}  // namespace

std::string serialize_index(const Index& index) {
  const IndexData& d = index.data();
  Writer w;
  w.bytes(kMagic, sizeof kMagic);
  w.u32(kVersion);
  write_lexicon(w, d.lemmas);
  write_lexicon(w, d.surfaces);

  w.u64(d.documents.size());
  for (const auto& doc : d.documents) {
    w.str(doc.id);
    w.str(doc.source);
    w.u8(doc.date ? 1 : 0);
    if (doc.date) w.str(*doc.date);
    w.u64(doc.range.begin);
    w.u64(doc.range.end);
  }

  const std::size_t n = d.lemma_ids.size();
  w.u64(n);
  for (LexId id : d.lemma_ids) w.u32(id);
  for (LexId id : d.surface_ids) w.u32(id);
  for (Pos t : d.tags) w.u8(static_cast<std::uint8_t>(t));
  std::vector<Position> starts;
  for (Position p = 0; p < n; ++p) {
    if (d.sentence_start[p]) starts.push_back(p);
  }
  w.u64(starts.size());
  Position prev = 0;
  for (Position p : starts) {
    w.varint(p - prev);
    prev = p;
  }

  write_postings(w, d.lemma_postings);
  write_postings(w, d.surface_postings);
  return w.take();
}

Index deserialize_index(std::string_view bytes) {
  if (bytes.size() < sizeof kMagic) {
    throw Error(Errc::TruncatedFile, "index file shorter than its header");
  }
  if (std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) {
    throw Error(Errc::BadMagic, "not a corpex index file");
  }
  Reader r(bytes.substr(sizeof kMagic));
  if (const auto v = r.u32(); v != kVersion) {
    throw Error(Errc::VersionMismatch, "index format version " + std::to_string(v) +
                                           ", expected " + std::to_string(kVersion));
  }

  IndexData d;
  d.lemmas = read_lexicon(r);
  d.surfaces = read_lexicon(r);

  const auto docs = r.count(4 + 4 + 1 + 16);
  d.documents.reserve(docs);
  for (std::uint64_t i = 0; i < docs; ++i) {
    Document doc;
    doc.id = r.str();
    doc.source = r.str();
    if (r.u8() != 0) doc.date = r.str();
    doc.range.begin = r.u64();
    doc.range.end = r.u64();
    d.documents.push_back(std::move(doc));
  }

  const auto n = r.count(9);
  d.lemma_ids.resize(n);
  d.surface_ids.resize(n);
  d.tags.resize(n);
  for (auto& id : d.lemma_ids) id = r.u32();
  for (auto& id : d.surface_ids) id = r.u32();
  for (auto& t : d.tags) {
    const auto v = r.u8();
    if (v >= kPosCount) throw Error(Errc::CorruptFile, "bad POS tag");
    t = static_cast<Pos>(v);
  }
  d.sentence_start.assign(n, 0);
  const auto starts = r.count(1);
  Position p = 0;
  for (std::uint64_t i = 0; i < starts; ++i) {
    p += r.varint();
    if (p >= n) throw Error(Errc::CorruptFile, "sentence start beyond corpus");
    d.sentence_start[p] = 1;
  }

  d.lemma_postings = read_postings(r, d.lemmas.size());
  d.surface_postings = read_postings(r, d.surfaces.size());
  if (r.remaining() != 0) {
    throw Error(Errc::CorruptFile, "trailing bytes after index data");
  }
  return Index(std::move(d));
}

void save_index(const Index& index, const std::filesystem::path& path) {
  const std::string bytes = serialize_index(index);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

Index load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read " + path.string());
  std::string bytes{std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>()};
  return deserialize_index(bytes);
}

}  // namespace corpex
