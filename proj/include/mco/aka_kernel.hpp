#pragma once

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mco::aka {

using Bytes = std::vector<uint8_t>;
using Key128 = std::array<uint8_t, 16>;
using Rand128 = std::array<uint8_t, 16>;
using Mac64 = std::array<uint8_t, 8>;
using Res64 = std::array<uint8_t, 8>;
using Ck128 = std::array<uint8_t, 16>;
using Ik128 = std::array<uint8_t, 16>;
using Ak48 = std::array<uint8_t, 6>;
using Sqn48 = std::array<uint8_t, 6>;
using Kasme256 = std::array<uint8_t, 32>;

inline std::string to_hex(const uint8_t* data, size_t len) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (size_t i = 0; i < len; ++i) {
    out.push_back(digits[data[i] >> 4]);
    out.push_back(digits[data[i] & 0xF]);
  }
  return out;
}

template <size_t N>
std::string to_hex(const std::array<uint8_t, N>& a) {
  return to_hex(a.data(), N);
}

inline std::string to_hex(const Bytes& b) { return to_hex(b.data(), b.size()); }

inline Sqn48 sqn_to_bytes(uint64_t sqn) {
  Sqn48 out;
  for (int i = 5; i >= 0; --i) {
    out[i] = static_cast<uint8_t>(sqn & 0xFF);
    sqn >>= 8;
  }
  return out;
}

inline uint64_t sqn_from_bytes(const Sqn48& b) {
  uint64_t out = 0;
  for (uint8_t byte : b) out = out << 8 | byte;
  return out;
}

template <size_t N>
std::array<uint8_t, N> xor_arrays(const std::array<uint8_t, N>& a,
                                  const std::array<uint8_t, N>& b) {
  std::array<uint8_t, N> out;
  for (size_t i = 0; i < N; ++i) out[i] = a[i] ^ b[i];
  return out;
}

inline std::array<uint8_t, 32> hmac_sha256(const uint8_t* key, size_t key_len,
                                           const uint8_t* data, size_t data_len) {
  std::array<uint8_t, 32> out{};
  size_t out_len = 0;
  if (!EVP_Q_mac(nullptr, "HMAC", nullptr, "SHA256", nullptr, key, key_len, data, data_len,
                 out.data(), out.size(), &out_len) ||
      out_len != out.size())
    throw std::runtime_error("hmac_sha256 failed");
  return out;
}

/// The keyed functions behind the authentication vector: f1 (network
/// MAC), f2 (user response), f3/f4 (cipher and integrity keys), f5
/// (anonymity key), and the serving-network-bound master-key KDF. The
/// default instantiation is HMAC-SHA256 with one domain-separation tag
/// byte per function and truncation to the conventional widths; a
/// test-vector-conformant kernel can be dropped in instead.
class CryptoKernel {
 public:
  virtual ~CryptoKernel() = default;
  virtual Mac64 f1(const Key128& k, uint16_t amf, uint64_t sqn, const Rand128& rand) const = 0;
  virtual Res64 f2(const Key128& k, const Rand128& rand) const = 0;
  virtual Ck128 f3(const Key128& k, const Rand128& rand) const = 0;
  virtual Ik128 f4(const Key128& k, const Rand128& rand) const = 0;
  virtual Ak48 f5(const Key128& k, const Rand128& rand) const = 0;
  virtual Kasme256 kdf(const Ck128& ck, const Ik128& ik, std::string_view snid,
                       const Sqn48& sqn_xor_ak) const = 0;
};

class KeyedHashKernel final : public CryptoKernel {
 public:
  Mac64 f1(const Key128& k, uint16_t amf, uint64_t sqn, const Rand128& rand) const override {
    Bytes msg{0x01};
    append(msg, sqn_to_bytes(sqn));
    msg.push_back(static_cast<uint8_t>(amf >> 8));
    msg.push_back(static_cast<uint8_t>(amf & 0xFF));
    append(msg, rand);
    return truncate<8>(mac(k, msg));
  }
  Res64 f2(const Key128& k, const Rand128& rand) const override {
    return truncate<8>(tagged(k, 0x02, rand));
  }
  Ck128 f3(const Key128& k, const Rand128& rand) const override {
    return truncate<16>(tagged(k, 0x03, rand));
  }
  Ik128 f4(const Key128& k, const Rand128& rand) const override {
    return truncate<16>(tagged(k, 0x04, rand));
  }
  Ak48 f5(const Key128& k, const Rand128& rand) const override {
    return truncate<6>(tagged(k, 0x05, rand));
  }
  Kasme256 kdf(const Ck128& ck, const Ik128& ik, std::string_view snid,
               const Sqn48& sqn_xor_ak) const override {
    std::array<uint8_t, 32> key;
    std::copy(ck.begin(), ck.end(), key.begin());
    std::copy(ik.begin(), ik.end(), key.begin() + 16);
    Bytes msg{0x10};
    msg.push_back(static_cast<uint8_t>(snid.size()));
    msg.insert(msg.end(), snid.begin(), snid.end());
    append(msg, sqn_xor_ak);
    return hmac_sha256(key.data(), key.size(), msg.data(), msg.size());
  }

 private:
  template <size_t M>
  static void append(Bytes& b, const std::array<uint8_t, M>& a) {
    b.insert(b.end(), a.begin(), a.end());
  }

  static std::array<uint8_t, 32> mac(const Key128& k, const Bytes& msg) {
    return hmac_sha256(k.data(), k.size(), msg.data(), msg.size());
  }

  static std::array<uint8_t, 32> tagged(const Key128& k, uint8_t tag, const Rand128& rand) {
    Bytes msg{tag};
    msg.insert(msg.end(), rand.begin(), rand.end());
    return mac(k, msg);
  }

  template <size_t N>
  static std::array<uint8_t, N> truncate(const std::array<uint8_t, 32>& full) {
    static_assert(N <= 32);
    std::array<uint8_t, N> out;
    std::copy_n(full.begin(), N, out.begin());
    return out;
  }
};

inline const CryptoKernel& default_kernel() {
  static const KeyedHashKernel kernel;
  return kernel;
}

}  // namespace mco::aka
