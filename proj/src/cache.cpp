#include "prohecke/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <thread>

#include <unistd.h>

namespace prohecke {

namespace {

constexpr char kMagic[4] = {'H', 'K', 'F', '1'};

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void put_poly(std::vector<uint8_t>& out, const PolyFp& p) {
    put_u32(out, static_cast<uint32_t>(p.coeffs().size()));
    for (uint32_t c : p.coeffs()) put_u32(out, c);
}

struct Reader {
    const std::vector<uint8_t>& b;
    size_t pos = 0;
    bool ok = true;

    uint64_t get(int bytes) {
        if (pos + bytes > b.size()) {
            ok = false;
            return 0;
        }
        uint64_t v = 0;
        for (int i = 0; i < bytes; ++i) v |= static_cast<uint64_t>(b[pos + i]) << (8 * i);
        pos += bytes;
        return v;
    }
    uint32_t u32() { return static_cast<uint32_t>(get(4)); }
    uint64_t u64() { return get(8); }
};

std::optional<PolyFp> get_poly(Reader& r, uint32_t p) {
    uint32_t len = r.u32();
    if (!r.ok || len > 1024) return std::nullopt;
    std::vector<uint32_t> c;
    for (uint32_t i = 0; i < len; ++i) {
        c.push_back(r.u32());
        if (c.back() >= p) return std::nullopt;
    }
    if (!r.ok || (!c.empty() && c.back() == 0)) return std::nullopt;
    return PolyFp(p, c);
}

std::string file_key(const ExtendedWeylElt& w) {
    std::string s = w.encode();
    for (char& c : s) c = c == ';' ? '_' : c == ',' ? '.' : c == '-' ? 'm' : c;
    return s;
}

}  // namespace

std::filesystem::path resolve_cache_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
    return ".prohecke-cache";
}

std::vector<uint8_t> encode_coset_table(const ExtendedWeylElt& w, const std::vector<GroupMat>& reps) {
    std::vector<uint8_t> out(kMagic, kMagic + 4);
    put_u32(out, static_cast<uint32_t>(w.n));
    put_u32(out, w.q);
    const std::string enc = w.encode();
    put_u32(out, static_cast<uint32_t>(enc.size()));
    out.insert(out.end(), enc.begin(), enc.end());
    put_u64(out, reps.size());
    for (const auto& g : reps) {
        std::vector<uint8_t> entry;
        for (const auto& e : g.entries()) {
            put_poly(entry, e.num());
            put_poly(entry, e.den());
        }
        put_u32(out, static_cast<uint32_t>(entry.size()));
        out.insert(out.end(), entry.begin(), entry.end());
    }
    return out;
}

std::optional<std::vector<GroupMat>> decode_coset_table(const ExtendedWeylElt& w, const std::vector<uint8_t>& bytes) {
    if (bytes.size() < 4 || !std::equal(kMagic, kMagic + 4, bytes.begin())) return std::nullopt;
    Reader r{bytes, 4};
    const int n = static_cast<int>(r.u32());
    const uint32_t q = r.u32();
    if (!r.ok || n != w.n || q != w.q) return std::nullopt;
    const std::string enc = w.encode();
    if (r.u32() != enc.size() || r.pos + enc.size() > bytes.size() ||
        !std::equal(enc.begin(), enc.end(), bytes.begin() + r.pos))
        return std::nullopt;
    r.pos += enc.size();
    const uint64_t count = r.u64();
    if (!r.ok || count > (uint64_t{1} << 24)) return std::nullopt;
    std::vector<GroupMat> reps;
    for (uint64_t k = 0; k < count; ++k) {
        const size_t len = r.u32();
        const size_t end = r.pos + len;
        std::vector<RatFunc> entries;
        for (int i = 0; i < n * n; ++i) {
            auto num = get_poly(r, q), den = get_poly(r, q);
            if (!num || !den || den->is_zero()) return std::nullopt;
            RatFunc x(*num, *den);
            // only canonical (reduced, monic denominator) encodings are accepted
            if (x.num() != *num || x.den() != *den) return std::nullopt;
            entries.push_back(std::move(x));
        }
        if (!r.ok || r.pos != end) return std::nullopt;
        try {
            reps.push_back(GroupMat::from_entries(n, q, std::move(entries)));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (r.pos != bytes.size()) return std::nullopt;
    for (const auto& g : reps)
        if (bruhat_iwahori_class(g) != w) return std::nullopt;
    return reps;
}

CosetTableCache::CosetTableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path CosetTableCache::path_for(const ExtendedWeylElt& w) const {
    return dir_ / ("n" + std::to_string(w.n) + "_q" + std::to_string(w.q) + "_" + file_key(w) + ".hkf");
}

void CosetTableCache::store(const ExtendedWeylElt& w, const std::vector<GroupMat>& reps) {
    static std::atomic<uint64_t> counter{0};
    std::filesystem::create_directories(dir_);
    const auto bytes = encode_coset_table(w, reps);
    const auto final_path = path_for(w);
    auto tmp = final_path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, final_path);
}

std::optional<std::vector<GroupMat>> CosetTableCache::load(const ExtendedWeylElt& w) const {
    std::ifstream f(path_for(w), std::ios::binary);
    if (!f) return std::nullopt;
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return decode_coset_table(w, bytes);
}

std::vector<GroupMat> CosetTableCache::get(const ExtendedWeylElt& w) {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto hit = load(w)) {
        ++hits_;
        return *hit;
    }
    const bool existed = std::filesystem::exists(path_for(w));
    auto reps = coset_reps(w);
    store(w, reps);
    ++(existed ? rewrites_ : misses_);
    return reps;
}

}  // namespace prohecke
