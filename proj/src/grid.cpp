#include "apt/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "apt/rng.hpp"

namespace apt {

namespace {

void check_dims(int height, int width, int channels, const char* what) {
    if (height < 1 || width < 1 || channels < 1) {
        throw std::invalid_argument(std::string(what) + ": dimensions must be >= 1, got " +
                                    std::to_string(height) + "x" + std::to_string(width) + "x" +
                                    std::to_string(channels));
    }
}

// Neumaier-compensated sum; keeps pooled statistics stable and effectively
// order-independent at desk scale.
double compensated_sum(const std::vector<double>& values, double shift, bool squared) {
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values) {
        double term = v - shift;
        if (squared) term *= term;
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

}  // namespace

LatentGrid::LatentGrid(int height_, int width_, int channels_, double fill) {
    check_dims(height_, width_, channels_, "LatentGrid");
    height = height_;
    width = width_;
    channels = channels_;
    values.assign(static_cast<size_t>(height) * width * channels, fill);
}

void LatentGrid::ensure_finite(const char* context) const {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::runtime_error(std::string(context) + ": non-finite value in grid");
        }
    }
}

LatentGrid make_grid(int height, int width, int channels, double fill) {
    if (!std::isfinite(fill)) throw std::invalid_argument("make_grid: fill must be finite");
    return LatentGrid(height, width, channels, fill);
}

GridStats stats(const LatentGrid& grid) {
    if (grid.values.empty()) throw std::invalid_argument("stats: empty grid");
    const double first = grid.values.front();
    const bool constant =
        std::all_of(grid.values.begin(), grid.values.end(), [first](double v) { return v == first; });
    if (constant) return {first, 0.0};

    const double n = static_cast<double>(grid.values.size());
    const double mean = compensated_sum(grid.values, 0.0, false) / n;
    const double var = compensated_sum(grid.values, mean, true) / n;
    return {mean, std::sqrt(var)};
}

std::vector<GridStats> stats_per_channel(const LatentGrid& grid) {
    if (grid.values.empty()) throw std::invalid_argument("stats_per_channel: empty grid");
    std::vector<GridStats> out(static_cast<size_t>(grid.channels));
    std::vector<double> channel_values(static_cast<size_t>(grid.height) * grid.width);
    for (int ch = 0; ch < grid.channels; ++ch) {
        size_t pos = 0;
        for (size_t i = static_cast<size_t>(ch); i < grid.values.size(); i += grid.channels) {
            channel_values[pos++] = grid.values[i];
        }
        LatentGrid view;
        view.height = grid.height;
        view.width = grid.width;
        view.channels = 1;
        view.values = channel_values;
        out[static_cast<size_t>(ch)] = stats(view);
    }
    return out;
}

LatentGrid sample_gaussian(int height, int width, int channels, const SeedKey& key) {
    check_dims(height, width, channels, "sample_gaussian");
    LatentGrid grid(height, width, channels, 0.0);
    NoiseStream stream(key);
    for (double& v : grid.values) v = stream.next_gaussian();
    return grid;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

constexpr char kMagic[4] = {'A', 'P', 'T', 'G'};

void put_u32(std::string& out, uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

uint32_t get_u32(const unsigned char* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("short write: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("rename failed: " + path);
    }
}

}  // namespace

void write_grid_binary(const LatentGrid& grid, const std::string& path) {
    grid.ensure_finite("write_grid_binary");
    std::string bytes;
    bytes.reserve(16 + grid.values.size() * 4);
    bytes.append(kMagic, 4);
    put_u32(bytes, static_cast<uint32_t>(grid.height));
    put_u32(bytes, static_cast<uint32_t>(grid.width));
    put_u32(bytes, static_cast<uint32_t>(grid.channels));
    for (double v : grid.values) {
        const float f = static_cast<float>(v);
        uint32_t u;
        std::memcpy(&u, &f, 4);
        put_u32(bytes, u);
    }
    write_file_atomic(path, bytes);
}

LatentGrid read_grid_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw std::runtime_error("not an APTG grid file: " + path);
    }
    const unsigned char* p = reinterpret_cast<const unsigned char*>(bytes.data());
    const uint32_t h = get_u32(p + 4);
    const uint32_t w = get_u32(p + 8);
    const uint32_t c = get_u32(p + 12);
    const size_t count = static_cast<size_t>(h) * w * c;
    if (h < 1 || w < 1 || c < 1 || bytes.size() != 16 + count * 4) {
        throw std::runtime_error("corrupt APTG grid file: " + path);
    }
    LatentGrid grid(static_cast<int>(h), static_cast<int>(w), static_cast<int>(c), 0.0);
    for (size_t i = 0; i < count; ++i) {
        const uint32_t u = get_u32(p + 16 + i * 4);
        float f;
        std::memcpy(&f, &u, 4);
        grid.values[i] = static_cast<double>(f);
    }
    grid.ensure_finite("read_grid_binary");
    return grid;
}

std::vector<std::string> write_grid_pgm(const LatentGrid& grid, const std::string& path_prefix) {
    grid.ensure_finite("write_grid_pgm");
    std::vector<std::string> paths;
    for (int ch = 0; ch < grid.channels; ++ch) {
        double lo = grid.at(0, 0, ch);
        double hi = lo;
        for (int r = 0; r < grid.height; ++r) {
            for (int c = 0; c < grid.width; ++c) {
                lo = std::min(lo, grid.at(r, c, ch));
                hi = std::max(hi, grid.at(r, c, ch));
            }
        }
        const double span = hi - lo;
        std::string bytes = "P5\n" + std::to_string(grid.width) + " " + std::to_string(grid.height) +
                            "\n65535\n";
        for (int r = 0; r < grid.height; ++r) {
            for (int c = 0; c < grid.width; ++c) {
                const double v = grid.at(r, c, ch);
                const double unit = span > 0.0 ? (v - lo) / span : 0.0;
                const auto q = static_cast<uint16_t>(std::lround(unit * 65535.0));
                bytes.push_back(static_cast<char>(q >> 8));  // PGM 16-bit is big-endian
                bytes.push_back(static_cast<char>(q & 0xff));
            }
        }
        const std::string path = path_prefix + "_c" + std::to_string(ch) + ".pgm";
        write_file_atomic(path, bytes);
        paths.push_back(path);
    }
    return paths;
}

namespace {

// Reads one whitespace-delimited token, skipping '#' comment lines.
std::string next_pnm_token(std::istream& in) {
    std::string token;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (!std::isspace(c)) {
            token.push_back(static_cast<char>(c));
            while ((c = in.get()) != EOF && !std::isspace(c)) token.push_back(static_cast<char>(c));
            break;
        }
    }
    if (token.empty()) throw std::runtime_error("truncated PNM header");
    return token;
}

}  // namespace

LatentGrid read_pnm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    const std::string magic = next_pnm_token(in);
    int channels = 0;
    if (magic == "P5") {
        channels = 1;
    } else if (magic == "P6") {
        channels = 3;
    } else {
        throw std::runtime_error("unsupported PNM magic '" + magic + "' in " + path);
    }
    const int w = std::stoi(next_pnm_token(in));
    const int h = std::stoi(next_pnm_token(in));
    const int maxval = std::stoi(next_pnm_token(in));
    if (w < 1 || h < 1 || maxval < 1 || maxval > 65535) {
        throw std::runtime_error("bad PNM header in " + path);
    }
    const int bytes_per_sample = maxval > 255 ? 2 : 1;
    const size_t count = static_cast<size_t>(w) * h * channels;
    std::string data(count * bytes_per_sample, '\0');
    in.read(data.data(), static_cast<std::streamsize>(data.size()));
    if (static_cast<size_t>(in.gcount()) != data.size()) {
        throw std::runtime_error("truncated PNM payload in " + path);
    }
    LatentGrid grid(h, w, channels, 0.0);
    const unsigned char* p = reinterpret_cast<const unsigned char*>(data.data());
    for (size_t i = 0; i < count; ++i) {
        uint32_t raw;
        if (bytes_per_sample == 2) {
            raw = (static_cast<uint32_t>(p[i * 2]) << 8) | p[i * 2 + 1];
        } else {
            raw = p[i];
        }
        grid.values[i] = static_cast<double>(raw) / maxval;
    }
    return grid;
}

}  // namespace apt
