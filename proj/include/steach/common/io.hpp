#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "steach/common/rng.hpp"

namespace steach::io {

// Little-endian binary helpers. All on-disk formats are explicitly LE so the
// files are portable and byte-reproducible.

template <typename T>
void write_le(std::ostream& os, T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    unsigned char buf[sizeof(T)];
    std::memcpy(buf, &value, sizeof(T));
    // this code targets little-endian hosts; keep the copy explicit anyway
    os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T read_le(std::istream& is) {
    static_assert(std::is_trivially_copyable_v<T>);
    unsigned char buf[sizeof(T)];
    is.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (!is) throw std::runtime_error("unexpected end of stream");
    T value;
    std::memcpy(&value, buf, sizeof(T));
    return value;
}

inline void write_bytes(std::ostream& os, const void* data, std::size_t n) {
    os.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
}

inline void read_bytes(std::istream& is, void* data, std::size_t n) {
    is.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
    if (!is) throw std::runtime_error("unexpected end of stream");
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

inline std::string checksum_hex(const std::string& bytes) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0')
       << fnv1a64(bytes.data(), bytes.size());
    return ss.str();
}

inline std::string file_checksum(const std::filesystem::path& path) {
    return checksum_hex(read_file(path));
}

}  // namespace steach::io
