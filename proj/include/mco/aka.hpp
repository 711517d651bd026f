#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mco/aka_kernel.hpp"

namespace mco::aka {

inline bool imsi_valid(const std::string& imsi) {
  if (imsi.size() != 15) return false;
  for (char c : imsi)
    if (c < '0' || c > '9') return false;
  return true;
}

// 15 decimal digits: 3 country, 2 network, 10 subscriber.
inline std::string imsi_mcc(const std::string& imsi) { return imsi.substr(0, 3); }
inline std::string imsi_mnc(const std::string& imsi) { return imsi.substr(3, 2); }
inline std::string imsi_msin(const std::string& imsi) { return imsi.substr(5); }

struct SubscriberRecord {
  std::string imsi;
  Key128 k{};
  uint64_t sqn{0};       // last sequence number used in an issued vector
  uint16_t amf{0x8000};
};

/// AUTN = (SQN xor AK) || AMF || MAC, 16 bytes on the wire.
struct Autn {
  Sqn48 sqn_xor_ak{};
  uint16_t amf{0};
  Mac64 mac{};

  std::array<uint8_t, 16> bytes() const {
    std::array<uint8_t, 16> out{};
    std::copy(sqn_xor_ak.begin(), sqn_xor_ak.end(), out.begin());
    out[6] = static_cast<uint8_t>(amf >> 8);
    out[7] = static_cast<uint8_t>(amf & 0xFF);
    std::copy(mac.begin(), mac.end(), out.begin() + 8);
    return out;
  }

  static Autn from_bytes(const std::array<uint8_t, 16>& b) {
    Autn a;
    std::copy_n(b.begin(), 6, a.sqn_xor_ak.begin());
    a.amf = static_cast<uint16_t>(b[6]) << 8 | b[7];
    std::copy_n(b.begin() + 8, 8, a.mac.begin());
    return a;
  }

  bool operator==(const Autn&) const = default;
};

struct AuthVector {
  Rand128 rand{};
  Res64 xres{};
  Kasme256 kasme{};
  Autn autn;

  /// Wire order: RAND || XRES || KASME || AUTN.
  Bytes concat() const {
    Bytes out(rand.begin(), rand.end());
    out.insert(out.end(), xres.begin(), xres.end());
    out.insert(out.end(), kasme.begin(), kasme.end());
    auto a = autn.bytes();
    out.insert(out.end(), a.begin(), a.end());
    return out;
  }

  bool operator==(const AuthVector&) const = default;
};

/// Derives the next authentication vector for a subscriber, advancing
/// its sequence number.
inline AuthVector generate_auth_vector(SubscriberRecord& rec, std::string_view snid,
                                       const Rand128& rand,
                                       const CryptoKernel& kernel = default_kernel()) {
  rec.sqn += 1;
  AuthVector av;
  av.rand = rand;
  const Mac64 mac = kernel.f1(rec.k, rec.amf, rec.sqn, rand);
  const Ak48 ak = kernel.f5(rec.k, rand);
  av.autn.sqn_xor_ak = xor_arrays(sqn_to_bytes(rec.sqn), ak);
  av.autn.amf = rec.amf;
  av.autn.mac = mac;
  const Ck128 ck = kernel.f3(rec.k, rand);
  const Ik128 ik = kernel.f4(rec.k, rand);
  av.kasme = kernel.kdf(ck, ik, snid, av.autn.sqn_xor_ak);
  av.xres = kernel.f2(rec.k, rand);
  return av;
}

/// Home subscriber store. Sequence-number advancement is serialized per
/// store so concurrent vector requests never reuse an SQN.
class Hss {
 public:
  void provision(SubscriberRecord rec) {
    std::lock_guard lock(mu_);
    subscribers_[rec.imsi] = std::move(rec);
  }

  std::optional<AuthVector> request_auth_vector(const std::string& imsi, std::string_view snid,
                                                const Rand128& rand,
                                                const CryptoKernel& kernel = default_kernel()) {
    std::lock_guard lock(mu_);
    auto it = subscribers_.find(imsi);
    if (it == subscribers_.end()) return std::nullopt;
    return generate_auth_vector(it->second, snid, rand, kernel);
  }

  std::optional<uint64_t> current_sqn(const std::string& imsi) const {
    std::lock_guard lock(mu_);
    auto it = subscribers_.find(imsi);
    if (it == subscribers_.end()) return std::nullopt;
    return it->second.sqn;
  }

 private:
  mutable std::mutex mu_;
  std::map<std::string, SubscriberRecord> subscribers_;
};

enum class UeFailure { MacMismatch, SqnOutOfRange };

inline const char* to_string(UeFailure f) {
  return f == UeFailure::MacMismatch ? "MacMismatch" : "SqnOutOfRange";
}

struct UeKeys {
  Res64 res{};
  Ck128 ck{};
  Ik128 ik{};
  Kasme256 kasme{};
  uint64_t sqn{0};
};

struct ChallengeOutcome {
  std::optional<UeKeys> keys;           // set on success
  UeFailure failure{UeFailure::MacMismatch};

  bool ok() const { return keys.has_value(); }
};

/// Verifies a network challenge against the subscriber key and the SQN
/// acceptance window, and derives the session keys on success. The MAC
/// is checked first; a stale or too-far-ahead sequence number is a
/// freshness failure, not an integrity one.
inline ChallengeOutcome ue_process_challenge(const Key128& k, uint64_t last_sqn,
                                             uint64_t window, const Rand128& rand,
                                             const Autn& autn, std::string_view snid,
                                             const CryptoKernel& kernel = default_kernel()) {
  ChallengeOutcome out;
  const Ak48 ak = kernel.f5(k, rand);
  const Sqn48 sqn_bytes = xor_arrays(autn.sqn_xor_ak, ak);
  const uint64_t sqn = sqn_from_bytes(sqn_bytes);
  if (kernel.f1(k, autn.amf, sqn, rand) != autn.mac) {
    out.failure = UeFailure::MacMismatch;
    return out;
  }
  if (sqn <= last_sqn || sqn - last_sqn > window) {
    out.failure = UeFailure::SqnOutOfRange;
    return out;
  }
  UeKeys keys;
  keys.res = kernel.f2(k, rand);
  keys.ck = kernel.f3(k, rand);
  keys.ik = kernel.f4(k, rand);
  keys.kasme = kernel.kdf(keys.ck, keys.ik, snid, autn.sqn_xor_ak);
  keys.sqn = sqn;
  out.keys = keys;
  return out;
}

class Ue {
 public:
  Ue(std::string imsi, Key128 k, uint64_t window = 1)
      : imsi_(std::move(imsi)), k_(k), window_(window) {}

  const std::string& imsi() const { return imsi_; }
  const Key128& key() const { return k_; }
  uint64_t last_sqn() const { return sqn_; }
  uint64_t window() const { return window_; }
  const std::optional<std::string>& guti() const { return guti_; }
  void set_guti(std::string g) { guti_ = std::move(g); }

  ChallengeOutcome process_challenge(const Rand128& rand, const Autn& autn,
                                     std::string_view snid,
                                     const CryptoKernel& kernel = default_kernel()) {
    ChallengeOutcome out = ue_process_challenge(k_, sqn_, window_, rand, autn, snid, kernel);
    if (out.ok()) sqn_ = out.keys->sqn;
    return out;
  }

 private:
  std::string imsi_;
  Key128 k_;
  uint64_t sqn_{0};
  uint64_t window_{1};
  std::optional<std::string> guti_;
};

/// Serving mobility management entity: holds the serving-network id and
/// the temporary-identifier map.
class Mme {
 public:
  explicit Mme(std::string snid) : snid_(std::move(snid)) {}

  const std::string& snid() const { return snid_; }

  std::optional<std::string> resolve_guti(const std::string& guti) const {
    auto it = guti_map_.find(guti);
    if (it == guti_map_.end()) return std::nullopt;
    return it->second;
  }

  std::string reallocate_guti(const std::string& imsi) {
    std::ostringstream g;
    g << "guti-" << std::hex << ++guti_counter_;
    guti_map_[g.str()] = imsi;
    return g.str();
  }

 private:
  std::string snid_;
  std::map<std::string, std::string> guti_map_;
  uint64_t guti_counter_{0};
};

enum class SessionState { Idle, IdSent, ChallengeSent, Authenticated, Failed };

enum class FailureReason { None, UnknownImsi, MacMismatch, SqnOutOfRange, ResMismatch, KeyMismatch };

inline const char* to_string(SessionState s) {
  switch (s) {
    case SessionState::Idle: return "Idle";
    case SessionState::IdSent: return "IdSent";
    case SessionState::ChallengeSent: return "ChallengeSent";
    case SessionState::Authenticated: return "Authenticated";
    case SessionState::Failed: return "Failed";
  }
  return "?";
}

inline const char* to_string(FailureReason r) {
  switch (r) {
    case FailureReason::None: return "None";
    case FailureReason::UnknownImsi: return "UnknownImsi";
    case FailureReason::MacMismatch: return "MacMismatch";
    case FailureReason::SqnOutOfRange: return "SqnOutOfRange";
    case FailureReason::ResMismatch: return "ResMismatch";
    case FailureReason::KeyMismatch: return "KeyMismatch";
  }
  return "?";
}

struct TranscriptMessage {
  int step{0};
  std::string from;
  std::string to;
  std::string name;
  std::vector<std::pair<std::string, std::string>> fields;

  std::string line() const {
    std::ostringstream out;
    out << step << " " << from << "->" << to << " " << name;
    for (const auto& [key, value] : fields) out << " " << key << "=" << value;
    return out.str();
  }
};

struct AkaSession {
  SessionState state{SessionState::Idle};
  FailureReason failure{FailureReason::None};
  std::vector<TranscriptMessage> transcript;
  std::optional<Kasme256> ue_kasme;
  std::optional<Kasme256> network_kasme;
  std::optional<std::string> allocated_guti;

  /// Line-oriented dump: one message per line, hex-encoded fields, then
  /// a result line. Stable for a fixed seed.
  std::string dump() const {
    std::ostringstream out;
    for (const auto& m : transcript) out << m.line() << "\n";
    out << "result state=" << to_string(state);
    if (state == SessionState::Failed) out << " reason=" << to_string(failure);
    if (state == SessionState::Authenticated && ue_kasme)
      out << " kasme=" << to_hex(*ue_kasme);
    out << "\n";
    return out.str();
  }
};

struct RunOptions {
  enum class Identity { Imsi, Guti } identity = Identity::Imsi;
  enum class Tamper { None, Mac, Res, Snid } tamper = Tamper::None;
  std::optional<int> autn_flip_bit;  // in-transit flip inside AUTN (0..127)
  std::optional<int> res_flip_bit;   // in-transit flip inside RES (0..63)
  std::optional<Rand128> rand;       // fixed challenge; otherwise drawn from seed
  uint64_t seed{0};
};

inline Rand128 rand_from_seed(uint64_t seed) {
  std::mt19937_64 rng(seed);
  Rand128 out;
  for (int half = 0; half < 2; ++half) {
    uint64_t v = rng();
    for (int i = 0; i < 8; ++i) {
      out[half * 8 + 7 - i] = static_cast<uint8_t>(v & 0xFF);
      v >>= 8;
    }
  }
  return out;
}

template <size_t N>
void flip_bit(std::array<uint8_t, N>& bytes, int bit) {
  bytes[static_cast<size_t>(bit) / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
}

/// Runs one authentication and key agreement exchange among the three
/// actors: identification, vector fetch, challenge, response, and the
/// final key check binding the serving-network identity.
inline AkaSession run_aka(Ue& ue, Mme& mme, Hss& hss, RunOptions options = {},
                          const CryptoKernel& kernel = default_kernel()) {
  AkaSession session;
  int step = 0;
  auto say = [&](const std::string& from, const std::string& to, const std::string& name,
                 std::vector<std::pair<std::string, std::string>> fields) {
    session.transcript.push_back({++step, from, to, name, std::move(fields)});
  };

  // step 1: attach with the permanent or temporary identifier
  std::string imsi;
  if (options.identity == RunOptions::Identity::Guti && ue.guti()) {
    say("UE", "MME", "AttachRequest", {{"guti", *ue.guti()}});
    if (auto resolved = mme.resolve_guti(*ue.guti())) {
      imsi = *resolved;
    } else {
      // unknown temporary id: ask for the permanent one
      say("MME", "UE", "IdentityRequest", {});
      say("UE", "MME", "IdentityResponse", {{"imsi", ue.imsi()}});
      imsi = ue.imsi();
    }
  } else {
    say("UE", "MME", "AttachRequest", {{"imsi", ue.imsi()}});
    imsi = ue.imsi();
  }
  session.state = SessionState::IdSent;

  // step 2: vector request toward the home network. A lying serving
  // network forwards a different identity than the one it claims to the
  // subscriber.
  std::string snid_to_hss = mme.snid();
  if (options.tamper == RunOptions::Tamper::Snid) snid_to_hss += "'";
  say("MME", "HSS", "AuthInfoRequest", {{"imsi", imsi}, {"snid", snid_to_hss}});

  const Rand128 rand = options.rand ? *options.rand : rand_from_seed(options.seed);
  auto av = hss.request_auth_vector(imsi, snid_to_hss, rand, kernel);
  if (!av) {
    session.state = SessionState::Failed;
    session.failure = FailureReason::UnknownImsi;
    return session;
  }

  // step 3: answer with AV = RAND || XRES || KASME || AUTN
  say("HSS", "MME", "AuthInfoAnswer",
      {{"rand", to_hex(av->rand)},
       {"xres", to_hex(av->xres)},
       {"kasme", to_hex(av->kasme)},
       {"autn", to_hex(av->autn.bytes())}});
  session.network_kasme = av->kasme;

  // step 4: challenge toward the subscriber, possibly corrupted in transit
  std::array<uint8_t, 16> autn_wire = av->autn.bytes();
  std::optional<int> autn_bit = options.autn_flip_bit;
  if (!autn_bit && options.tamper == RunOptions::Tamper::Mac) autn_bit = 64;  // first MAC bit
  if (autn_bit) flip_bit(autn_wire, *autn_bit);
  say("MME", "UE", "AuthenticationRequest",
      {{"rand", to_hex(av->rand)}, {"autn", to_hex(autn_wire.data(), autn_wire.size())}});
  session.state = SessionState::ChallengeSent;

  ChallengeOutcome outcome =
      ue.process_challenge(rand, Autn::from_bytes(autn_wire), mme.snid(), kernel);
  if (!outcome.ok()) {
    session.state = SessionState::Failed;
    session.failure = outcome.failure == UeFailure::MacMismatch ? FailureReason::MacMismatch
                                                                : FailureReason::SqnOutOfRange;
    return session;
  }
  session.ue_kasme = outcome.keys->kasme;

  // step 5: response, compared against XRES at the serving network
  Res64 res_wire = outcome.keys->res;
  std::optional<int> res_bit = options.res_flip_bit;
  if (!res_bit && options.tamper == RunOptions::Tamper::Res) res_bit = 0;
  if (res_bit) flip_bit(res_wire, *res_bit);
  say("UE", "MME", "AuthenticationReply", {{"res", to_hex(res_wire)}});

  if (res_wire != av->xres) {
    session.state = SessionState::Failed;
    session.failure = FailureReason::ResMismatch;
    return session;
  }

  // both sides must have derived the same master key; a serving-network
  // identity mismatch surfaces here
  if (*session.ue_kasme != *session.network_kasme) {
    session.state = SessionState::Failed;
    session.failure = FailureReason::KeyMismatch;
    return session;
  }

  session.state = SessionState::Authenticated;
  const std::string guti = mme.reallocate_guti(imsi);
  ue.set_guti(guti);
  session.allocated_guti = guti;
  return session;
}

}  // namespace mco::aka
