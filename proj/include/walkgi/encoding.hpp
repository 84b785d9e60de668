#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <openssl/evp.h>

namespace walkgi {

using Bytes = std::vector<std::uint8_t>;

/// Canonical byte serialization. Counts and lengths are 32-bit big-endian;
/// integers are a 32-bit length followed by the minimal big-endian two's
/// complement representation (zero is the single byte 0x00).
class ByteWriter {
public:
    void tag(char t) { out_.push_back(static_cast<std::uint8_t>(t)); }

    void u32(std::uint64_t v) {
        if (v > 0xFFFFFFFFULL) throw std::length_error("encoded length exceeds 32 bits");
        for (int shift = 24; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
    }

    void integer(const mpz_class& v) {
        const Bytes body = twos_complement(v);
        u32(body.size());
        out_.insert(out_.end(), body.begin(), body.end());
    }

    void blob(std::span<const std::uint8_t> b) {
        u32(b.size());
        out_.insert(out_.end(), b.begin(), b.end());
    }

    Bytes take() && { return std::move(out_); }

    static Bytes twos_complement(const mpz_class& v) {
        if (v == 0) return Bytes{0};
        // Magnitude bytes of |v| (or |v| - 1 for negatives, then inverted).
        mpz_class mag = v < 0 ? mpz_class(-v - 1) : v;
        std::size_t count = 0;
        Bytes raw;
        if (mag != 0) {
            raw.resize((mpz_sizeinbase(mag.get_mpz_t(), 2) + 7) / 8);
            mpz_export(raw.data(), &count, 1, 1, 1, 0, mag.get_mpz_t());
            raw.resize(count);
        }
        if (raw.empty() || (raw.front() & 0x80) != 0) raw.insert(raw.begin(), 0);
        if (v < 0) {
            for (auto& b : raw) b = static_cast<std::uint8_t>(~b);
        }
        return raw;
    }

private:
    Bytes out_;
};

/// 256-bit content digest (SHA-256).
using Digest = std::array<std::uint8_t, 32>;

inline Digest sha256(std::span<const std::uint8_t> data) {
    Digest d{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), d.data(), &len, EVP_sha256(), nullptr) != 1 || len != d.size()) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    return d;
}

inline std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(kDigits[b >> 4]);
        s.push_back(kDigits[b & 0xF]);
    }
    return s;
}

inline std::string digest_hex(std::span<const std::uint8_t> data) { return to_hex(sha256(data)); }

}  // namespace walkgi
