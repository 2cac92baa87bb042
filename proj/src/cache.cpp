#include "ringlab/cache.hpp"

#include "ringlab/ringexpr.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>

namespace ringlab {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[4] = {'R', 'L', 'B', 'C'};
const std::string kSuffix = ".v" + std::to_string(Cache::kFormatVersion) + ".bin";

class Writer {
 public:
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void bytes(const std::string& s) { out_ += s; }
  void set(const ElemSet& s) {
    auto blocks = s.blocks();
    u32(static_cast<std::uint32_t>(blocks.size()));
    for (auto b : blocks) u64(b);
  }
  const std::string& data() const { return out_; }

 private:
  void put(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) out_ += static_cast<char>((v >> (8 * i)) & 0xff);
  }
  std::string out_;
};

class Reader {
 public:
  explicit Reader(const std::string& data) : data_(data) {}
  bool u32(std::uint32_t& v) {
    std::uint64_t w;
    if (!get(w, 4)) return false;
    v = static_cast<std::uint32_t>(w);
    return true;
  }
  bool u64(std::uint64_t& v) { return get(v, 8); }
  bool bytes(std::size_t n, std::string& s) {
    if (data_.size() - pos_ < n) return false;
    s = data_.substr(pos_, n);
    pos_ += n;
    return true;
  }
  bool set(std::size_t universe, ElemSet& s) {
    std::uint32_t count;
    if (!u32(count) || count != (universe + 63) / 64) return false;
    std::vector<std::uint64_t> blocks(count);
    for (auto& b : blocks)
      if (!u64(b)) return false;
    s = ElemSet::from_blocks(universe, blocks);
    return true;
  }
  bool done() const { return pos_ == data_.size(); }

 private:
  bool get(std::uint64_t& v, int n) {
    if (data_.size() - pos_ < static_cast<std::size_t>(n)) return false;
    v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    pos_ += n;
    return true;
  }
  const std::string& data_;
  std::size_t pos_ = 0;
};

std::string hash_text(const std::string& text) { return hex64(fnv1a64(text.data(), text.size())); }

}  // namespace

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::default_dir() {
  if (const char* env = std::getenv("RINGLAB_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "ringlab";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "ringlab";
  return fs::temp_directory_path() / "ringlab-cache";
}

fs::path Cache::entry_path(const std::string& canonical_text) const {
  return dir_ / (hash_text(canonical_text) + kSuffix);
}

std::optional<InvariantBundle> Cache::load(const std::string& canonical_text, const TableRing& ring) const {
  std::string data;
  {
    std::lock_guard lock(mutex_);
    std::ifstream in(entry_path(canonical_text), std::ios::binary);
    if (!in) return std::nullopt;
    data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  Reader rd(data);
  std::string magic, text;
  std::uint32_t version, len, order;
  std::uint64_t add_sum, mul_sum;
  if (!rd.bytes(4, magic) || magic != std::string(kMagic, 4)) return std::nullopt;
  if (!rd.u32(version) || version != kFormatVersion) return std::nullopt;
  if (!rd.u32(len) || !rd.bytes(len, text) || text != canonical_text) return std::nullopt;
  if (!rd.u32(order) || order != ring.order()) return std::nullopt;
  if (!rd.u64(add_sum) || !rd.u64(mul_sum)) return std::nullopt;
  if (add_sum != ring.add_checksum() || mul_sum != ring.mul_checksum()) return std::nullopt;
  InvariantBundle b;
  for (ElemSet* s : {&b.units, &b.idempotents, &b.nilpotents, &b.center, &b.jacobson, &b.jsharp, &b.prime_radical}) {
    if (!rd.set(order, *s)) return std::nullopt;
  }
  b.inverse.resize(order);
  for (auto& inv : b.inverse) {
    if (!rd.u32(inv)) return std::nullopt;
  }
  if (!rd.done()) return std::nullopt;
  return b;
}

bool Cache::store(const std::string& canonical_text, const TableRing& ring, const InvariantBundle& b) {
  Writer w;
  w.bytes(std::string(kMagic, 4));
  w.u32(kFormatVersion);
  w.u32(static_cast<std::uint32_t>(canonical_text.size()));
  w.bytes(canonical_text);
  w.u32(static_cast<std::uint32_t>(ring.order()));
  w.u64(ring.add_checksum());
  w.u64(ring.mul_checksum());
  for (const ElemSet* s : {&b.units, &b.idempotents, &b.nilpotents, &b.center, &b.jacobson, &b.jsharp, &b.prime_radical}) {
    w.set(*s);
  }
  for (Elem inv : b.inverse) w.u32(inv);

  std::lock_guard lock(mutex_);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return false;
  fs::path target = entry_path(canonical_text);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(w.data().data(), static_cast<std::streamsize>(w.data().size()));
    if (!out) return false;
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

Cache::Stats Cache::stats() const {
  std::lock_guard lock(mutex_);
  Stats s;
  std::error_code ec;
  if (!fs::exists(dir_, ec)) return s;
  for (fs::directory_iterator it(dir_, ec), end; !ec && it != end; it.increment(ec)) {
    const fs::path& p = it->path();
    if (p.extension() != ".bin") continue;
    ++s.entries;
    s.bytes += fs::file_size(p, ec);
    if (ec) break;
  }
  if (ec) throw RingError(ErrorCode::Io, dir_.string() + ": " + ec.message());
  return s;
}

std::size_t Cache::clear() {
  std::lock_guard lock(mutex_);
  std::size_t removed = 0;
  std::error_code ec;
  if (!fs::exists(dir_, ec)) return 0;
  std::vector<fs::path> doomed;
  for (fs::directory_iterator it(dir_, ec), end; !ec && it != end; it.increment(ec)) {
    const auto ext = it->path().extension();
    if (ext == ".bin" || ext == ".tmp") doomed.push_back(it->path());
  }
  if (ec) throw RingError(ErrorCode::Io, dir_.string() + ": " + ec.message());
  for (const auto& p : doomed) {
    if (!fs::remove(p, ec) || ec) throw RingError(ErrorCode::Io, p.string() + ": " + (ec ? ec.message() : "not removed"));
    if (p.extension() == ".bin") ++removed;
  }
  return removed;
}

}  // namespace ringlab
