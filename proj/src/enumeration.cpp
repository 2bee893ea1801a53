#include "fsimple/enumeration.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "fsimple/errors.hpp"
#include "fsimple/parallel.hpp"

namespace fsimple {

namespace {

constexpr char kMagic[8] = {'F', 'S', 'B', 'A', 'L', 'L', '\0', '\0'};
constexpr std::uint32_t kCacheVersion = 1;

std::array<double, 4> key_of(const Isometry& g) { return g.entries(); }
std::array<double, 4> neg_key_of(const Isometry& g) {
  const auto& e = g.entries();
  return {-e[0], -e[1], -e[2], -e[3]};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_key(const SurfaceGroup& G, int radius, double tol) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "|r=%d|tol=%.17g", radius, tol);
  return G.key() + buf;
}

std::optional<std::filesystem::path> cache_root(const BallOptions& opt) {
  if (!opt.use_cache) return std::nullopt;
  if (opt.cache_dir) return opt.cache_dir;
  if (const char* env = std::getenv("FSIMPLE_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::nullopt;
}

template <class T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
template <class T>
bool get(std::istream& is, T& v) {
  return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), sizeof v));
}

std::optional<std::vector<BallElement>> read_cache(const std::filesystem::path& file,
                                                   const std::string& key) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  std::uint32_t version = 0, klen = 0;
  if (!in.read(magic, 8) || std::string(magic, 8) != std::string(kMagic, 8) || !get(in, version)) {
    std::cerr << "warning: ignoring unreadable ball cache " << file << "\n";
    return std::nullopt;
  }
  if (version != kCacheVersion) {
    std::cerr << "warning: ignoring ball cache " << file << " with schema version " << version
              << " (expected " << kCacheVersion << ")\n";
    return std::nullopt;
  }
  if (!get(in, klen) || klen > 4096) return std::nullopt;
  std::string stored(klen, '\0');
  if (!in.read(stored.data(), klen) || stored != key) return std::nullopt;
  std::uint64_t count = 0;
  if (!get(in, count)) return std::nullopt;
  std::vector<BallElement> out;
  out.reserve(count);
  std::vector<Letter> letters;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint32_t len = 0;
    if (!get(in, len) || len > 1024) return std::nullopt;
    letters.resize(len);
    if (len && !in.read(reinterpret_cast<char*>(letters.data()), len)) return std::nullopt;
    std::array<double, 4> e;
    for (double& x : e)
      if (!get(in, x)) return std::nullopt;
    try {
      out.push_back({Word(letters), Isometry::from_normalized(e)});
    } catch (const InvalidArgument&) {
      return std::nullopt;
    }
  }
  return out;
}

void write_cache(const std::filesystem::path& file, const std::string& key,
                 const std::vector<BallElement>& ball) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out.write(kMagic, 8);
    put(out, kCacheVersion);
    put(out, static_cast<std::uint32_t>(key.size()));
    out.write(key.data(), static_cast<std::streamsize>(key.size()));
    put(out, static_cast<std::uint64_t>(ball.size()));
    for (const auto& el : ball) {
      put(out, static_cast<std::uint32_t>(el.word.size()));
      out.write(reinterpret_cast<const char*>(el.word.letters().data()),
                static_cast<std::streamsize>(el.word.size()));
      for (double x : el.iso.entries()) put(out, x);
    }
    if (!out) return;
  }
  std::filesystem::rename(tmp, file, ec);
}

std::vector<BallElement> compute_ball(const SurfaceGroup& G, int radius, const BallOptions& opt) {
  const int nl = 2 * G.num_generators();
  std::vector<Isometry> gen(static_cast<std::size_t>(nl));
  for (int c = 0; c < nl; ++c)
    gen[static_cast<std::size_t>(c)] =
        letter_inverse(static_cast<Letter>(c)) ? G.generators[static_cast<std::size_t>(c / 2)].inverse()
                                               : G.generators[static_cast<std::size_t>(c / 2)];

  std::vector<BallElement> out;
  IsometryIndex index(opt.tol);
  out.push_back({Word(), Isometry()});
  index.find_or_insert(Isometry());
  std::size_t layer_begin = 0, layer_end = 1;

  struct Cand {
    std::size_t parent;
    Letter letter;
    Isometry iso;
  };
  for (int len = 1; len <= radius; ++len) {
    const std::size_t np = layer_end - layer_begin;
    std::vector<std::vector<Cand>> parts(chunk_count(np, opt.workers));
    parallel_chunks(np, opt.workers, [&](std::size_t c, std::size_t lo, std::size_t hi) {
      auto& part = parts[c];
      for (std::size_t i = layer_begin + lo; i < layer_begin + hi; ++i) {
        const Word& w = out[i].word;
        for (int code = 0; code < nl; ++code) {
          const auto l = static_cast<Letter>(code);
          if (!w.empty() && w[w.size() - 1] == letter_inv(l)) continue;
          part.push_back({i, l, out[i].iso * gen[static_cast<std::size_t>(code)]});
        }
      }
    });
    for (auto& part : parts) {
      for (auto& cand : part) {
        auto [idx, fresh] = index.find_or_insert(cand.iso);
        if (!fresh) continue;
        std::vector<Letter> ls = out[cand.parent].word.letters();
        ls.push_back(cand.letter);
        out.push_back({Word(ls), cand.iso});
      }
    }
    layer_begin = layer_end;
    layer_end = out.size();
  }
  return out;
}

}  // namespace

std::optional<std::size_t> IsometryIndex::find(const Isometry& g) const {
  auto a = set_.find(key_of(g));
  auto b = set_.find(neg_key_of(g));
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}

std::pair<std::size_t, bool> IsometryIndex::find_or_insert(const Isometry& g) {
  if (auto f = find(g)) return {*f, false};
  return {set_.insert(key_of(g)), true};
}

std::string ball_cache_name(const SurfaceGroup& G, int radius, double tol) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "ball-%016llx.bin",
                static_cast<unsigned long long>(fnv1a(cache_key(G, radius, tol))));
  return buf;
}

std::vector<BallElement> enumerate_ball(const SurfaceGroup& G, int radius, const BallOptions& opt) {
  if (radius < 0) throw InvalidArgument("ball radius must be non-negative");
  const auto root = cache_root(opt);
  const std::string key = cache_key(G, radius, opt.tol);
  std::filesystem::path file;
  if (root) {
    file = *root / ball_cache_name(G, radius, opt.tol);
    if (auto hit = read_cache(file, key)) return std::move(*hit);
  }
  auto ball = compute_ball(G, radius, opt);
  if (root) write_cache(file, key, ball);
  return ball;
}

std::vector<ConjClass> conjugacy_classes(const SurfaceGroup& G, int radius) {
  if (radius < 1) throw InvalidArgument("class radius must be at least 1");
  return enumerate_cyclic_classes(G.num_generators(), radius);
}

}  // namespace fsimple
