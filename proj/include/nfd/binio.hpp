#pragma once

#include <cstdint>
#include <fstream>
#include <string>

#include "nfd/errors.hpp"
#include "nfd/tensor.hpp"

// Little-endian binary record helpers shared by the checkpoint and dataset
// formats. Readers track their byte offset so format errors can name it.
namespace nfd::binio {

inline void require_little_endian() {
    const std::uint32_t probe = 1;
    if (*reinterpret_cast<const unsigned char*>(&probe) != 1)
        throw IoError("big-endian hosts are not supported by the binary formats");
}

class Writer {
public:
    explicit Writer(const std::string& path) : path_(path), f_(path, std::ios::binary) {
        require_little_endian();
        if (!f_) throw IoError("cannot open '" + path + "' for writing");
    }

    void bytes(const void* p, std::size_t n) {
        f_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
        if (!f_) throw IoError("write failed on '" + path_ + "'");
        offset_ += n;
    }

    void u32(std::uint32_t v) { bytes(&v, sizeof v); }
    void u64(std::uint64_t v) { bytes(&v, sizeof v); }
    void f64(double v) { bytes(&v, sizeof v); }

    void str(const std::string& s) {
        u32(static_cast<std::uint32_t>(s.size()));
        bytes(s.data(), s.size());
    }

    void tensor(const Tensor& t) {
        u32(static_cast<std::uint32_t>(t.rank()));
        for (i64 a = 0; a < t.rank(); ++a) u64(static_cast<std::uint64_t>(t.extent(a)));
        bytes(t.data(), static_cast<std::size_t>(t.size()) * sizeof(double));
    }

    void named_tensor(const std::string& name, const Tensor& t) {
        str(name);
        tensor(t);
    }

    std::size_t offset() const { return offset_; }

private:
    std::string path_;
    std::ofstream f_;
    std::size_t offset_ = 0;
};

class Reader {
public:
    explicit Reader(const std::string& path) : path_(path), f_(path, std::ios::binary) {
        require_little_endian();
        if (!f_) throw IoError("cannot open '" + path + "' for reading");
    }

    void bytes(void* p, std::size_t n) {
        f_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(f_.gcount()) != n)
            throw FormatError("unexpected end of file in '" + path_ + "'", offset_);
        offset_ += n;
    }

    std::uint32_t u32() {
        std::uint32_t v;
        bytes(&v, sizeof v);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v;
        bytes(&v, sizeof v);
        return v;
    }
    double f64() {
        double v;
        bytes(&v, sizeof v);
        return v;
    }

    std::string str(std::size_t max_len = 1 << 20) {
        const std::size_t at = offset_;
        const std::uint32_t n = u32();
        if (n > max_len) throw FormatError("string length " + std::to_string(n) + " too large", at);
        std::string s(n, '\0');
        if (n > 0) bytes(s.data(), n);
        return s;
    }

    Tensor tensor(std::uint32_t max_rank = 8) {
        const std::size_t at = offset_;
        const std::uint32_t rank = u32();
        if (rank == 0 || rank > max_rank)
            throw FormatError("bad tensor rank " + std::to_string(rank), at);
        std::vector<i64> shape(rank);
        for (auto& e : shape) {
            e = static_cast<i64>(u64());
            if (e <= 0 || e > (1LL << 32)) throw FormatError("bad tensor extent", at);
        }
        Tensor t(shape);
        bytes(t.data(), static_cast<std::size_t>(t.size()) * sizeof(double));
        return t;
    }

    void expect_magic(const char* magic, std::size_t len) {
        const std::size_t at = offset_;
        std::string buf(len, '\0');
        bytes(buf.data(), len);
        if (buf != std::string(magic, len))
            throw FormatError("bad magic in '" + path_ + "'", at);
    }

    std::size_t offset() const { return offset_; }

private:
    std::string path_;
    std::ifstream f_;
    std::size_t offset_ = 0;
};

}  // namespace nfd::binio
