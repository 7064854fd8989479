// environment.cpp — snapshot materialization and binary (de)serialization.
#include "rwre/environment.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace rwre {

namespace {

constexpr char kMagic[8] = {'R', 'W', 'R', 'E', 'E', 'N', 'V', '\0'};
constexpr uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& os, T v) {
    // Build host is little-endian; the format is defined little-endian.
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw std::runtime_error("env snapshot: truncated file");
    return v;
}

} // namespace

EnvSnapshot snapshot_environment(const Environment& env, const EnvWindow& window) {
    if (!window.valid()) throw std::invalid_argument("snapshot_environment: invalid window");
    const int64_t cells = window.n_t() * window.n_x();
    if (cells > (int64_t(1) << 28)) throw std::invalid_argument("snapshot_environment: window overflow");
    EnvSnapshot snap;
    snap.mode = static_cast<uint32_t>(env.mode());
    snap.param1 = env.param1();
    snap.param2 = env.param2();
    snap.seed = env.seed();
    snap.replica = env.replica();
    snap.window = window;
    snap.weights.resize(static_cast<size_t>(cells));
    size_t i = 0;
    for (int64_t t = window.t_min; t <= window.t_max; ++t)
        for (int64_t x = window.x_min; x <= window.x_max; ++x)
            snap.weights[i++] = env.weight(t, x);
    return snap;
}

void write_env_snapshot(const EnvSnapshot& snap, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("env snapshot: cannot open " + path);
    os.write(kMagic, 8);
    put<uint32_t>(os, kVersion);
    put<uint32_t>(os, snap.mode);
    put<double>(os, snap.param1);
    put<double>(os, snap.param2);
    put<uint64_t>(os, snap.seed);
    put<uint32_t>(os, snap.replica);
    put<uint32_t>(os, 0);
    put<int64_t>(os, snap.window.t_min);
    put<int64_t>(os, snap.window.t_max);
    put<int64_t>(os, snap.window.x_min);
    put<int64_t>(os, snap.window.x_max);
    os.write(reinterpret_cast<const char*>(snap.weights.data()),
             static_cast<std::streamsize>(snap.weights.size() * sizeof(double)));
    if (!os) throw std::runtime_error("env snapshot: write failed for " + path);
}

EnvSnapshot read_env_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("env snapshot: cannot open " + path);
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error("env snapshot: bad magic");
    const uint32_t version = get<uint32_t>(is);
    if (version != kVersion) throw std::runtime_error("env snapshot: unsupported version");
    EnvSnapshot snap;
    snap.mode = get<uint32_t>(is);
    snap.param1 = get<double>(is);
    snap.param2 = get<double>(is);
    snap.seed = get<uint64_t>(is);
    snap.replica = get<uint32_t>(is);
    (void)get<uint32_t>(is);   // reserved
    snap.window.t_min = get<int64_t>(is);
    snap.window.t_max = get<int64_t>(is);
    snap.window.x_min = get<int64_t>(is);
    snap.window.x_max = get<int64_t>(is);
    if (!snap.window.valid()) throw std::runtime_error("env snapshot: invalid window");
    const int64_t cells = snap.window.n_t() * snap.window.n_x();
    snap.weights.resize(static_cast<size_t>(cells));
    is.read(reinterpret_cast<char*>(snap.weights.data()),
            static_cast<std::streamsize>(snap.weights.size() * sizeof(double)));
    if (!is) throw std::runtime_error("env snapshot: truncated weight grid");
    return snap;
}

} // namespace rwre
