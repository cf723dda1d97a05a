// Copyright 2026 The cverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cverify/codec.hpp"
#include "cverify/rng.hpp"
#include "cverify/security.hpp"

using namespace cverify;

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitMalformed = 2;

struct Options {
  Scheme scheme = Scheme::kSquirrels;
  std::string instance;
  std::uint64_t seed = 1;
  std::optional<std::size_t> t;
  std::optional<std::size_t> c;
  std::optional<double> mu;
  std::size_t trials = 10000;
  std::string in;
  std::optional<std::string> msg;
  std::string out;
  std::string pk;
  std::string sk;
  std::string ck;
  std::string vk;
  std::string sig;
  std::string params;

  // keygen
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t w = 0;
  std::int64_t bound = 3;
  unsigned bits = 512;

  // simulate-forgery
  std::size_t dim = 4;
  std::size_t queries = 4;
  unsigned prime_bits = 12;
  unsigned query_bits = 40;
};

Error malformed(const std::string& what) { return Error(ErrorCode::kMalformedInput, what); }

Bytes read_file(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::kInvalidArgument, "missing input path");
  std::ifstream f(path, std::ios::binary);
  if (!f) throw malformed("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, ByteView data, bool verifier_private) {
  if (path.empty()) throw Error(ErrorCode::kInvalidArgument, "missing output path");
  const mode_t mode = verifier_private ? 0600 : 0644;
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, mode);
  if (fd < 0) throw Error(ErrorCode::kInvalidArgument, "cannot create " + path);
  if (verifier_private) ::fchmod(fd, 0600);
  std::size_t done = 0;
  while (done < data.size()) {
    const ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n <= 0) {
      ::close(fd);
      throw Error(ErrorCode::kInvalidArgument, "write failed for " + path);
    }
    done += static_cast<std::size_t>(n);
  }
  ::close(fd);
}

void save(const std::string& path, Scheme scheme, FileKind kind, std::uint16_t tag,
          ByteView payload) {
  const bool verifier_private = kind == FileKind::kCompressionKey ||
                                kind == FileKind::kVerificationKey ||
                                kind == FileKind::kSecretKey;
  write_file(path, encode_file(scheme, kind, tag, payload), verifier_private);
}

DecodedFile load(const std::string& path, Scheme scheme, FileKind kind) {
  DecodedFile file = decode_file(read_file(path));
  if (file.header.scheme != scheme || file.header.kind != kind) {
    throw malformed(path + ": expected " + to_string(scheme) + " " + to_string(kind) + ", found " +
                    to_string(file.header.scheme) + " " + to_string(file.header.kind));
  }
  return file;
}

Bytes message(const Options& o) {
  if (o.msg) return Bytes(o.msg->begin(), o.msg->end());
  return read_file(o.in);
}

bool is_toy(const std::string& instance) { return instance.empty() || instance == "toy"; }

SquirrelsParams squirrels_params(const Options& o) {
  if (!o.params.empty()) {
    const DecodedFile f = load(o.params, Scheme::kSquirrels, FileKind::kParams);
    return decode_squirrels_params(f.payload, f.header.tag);
  }
  if (is_toy(o.instance)) throw Error(ErrorCode::kInvalidArgument, "need --params or --instance");
  return squirrels_named_params(squirrels_instance(o.instance).tag);
}

WaveParams wave_params(const Options& o) {
  if (!o.params.empty()) {
    const DecodedFile f = load(o.params, Scheme::kWave, FileKind::kParams);
    return decode_wave_params(f.payload, f.header.tag);
  }
  if (is_toy(o.instance)) throw Error(ErrorCode::kInvalidArgument, "need --params or --instance");
  return wave_named_params(wave_instance(o.instance).tag);
}

std::size_t squirrels_t(const Options& o, const SquirrelsParams& p) {
  if (o.t) return *o.t;
  if (o.mu) return squirrels_choose_t(*o.mu).t;
  return p.tag == kSquirrelsToyTag ? 1 : squirrels_instance(p.tag).t;
}

std::size_t wave_c(const Options& o, const WaveParams& p) {
  if (o.c) return *o.c;
  if (o.mu) return wave_choose_c(*o.mu).c;
  return p.tag == kWaveToyTag ? 4 : wave_instance(p.tag).c;
}

int report(Verdict v) {
  std::cout << (v == Verdict::kAccept ? "accept" : "reject") << "\n";
  return v == Verdict::kAccept ? kExitAccept : kExitReject;
}

// params

std::size_t wave_pk_bytes(const WaveParams& p) { return p.k * ((p.syndrome_len() + 3) / 4); }
std::size_t wave_ck_bytes(const WaveParams& p, std::size_t c) {
  return 4 + p.syndrome_len() * ((c + 3) / 4);
}

int cmd_params(const Options& o) {
  char line[256];
  if (o.scheme == Scheme::kSquirrels) {
    if (!o.instance.empty()) squirrels_instance(o.instance);
    std::cout << "instance        lambda     n    s   t      mu      |PK|   |CK|    |VK|  PK:VK\n";
    for (const SquirrelsInstance& inst : squirrels_instances()) {
      if (!o.instance.empty() && squirrels_instance(o.instance).tag != inst.tag) continue;
      const std::size_t t = o.t ? *o.t : o.mu ? squirrels_choose_t(*o.mu).t : inst.t;
      const double mu = log2_binomial(static_cast<double>(kPrimes31), t);
      const std::size_t pk = squirrels_pk_bytes(inst.n, inst.s);
      const std::size_t vk = squirrels_vk_bytes(inst.n, t);
      std::snprintf(line, sizeof line, "%-14s %7u %5zu %4zu %3zu %7.1f %9zu %6zu %7zu %6.2f\n",
                    inst.name, inst.lambda, inst.n, inst.s, t, mu, pk,
                    squirrels_ck_bytes(inst.s, t), vk, static_cast<double>(pk) / vk);
      std::cout << line;
    }
    return 0;
  }
  if (o.scheme == Scheme::kWave) {
    if (!o.instance.empty()) wave_instance(o.instance);
    std::cout << "instance  lambda      n     k    c      mu       |PK|    |CK|    |VK|  PK:VK\n";
    for (const WaveInstance& inst : wave_instances()) {
      if (!o.instance.empty() && wave_instance(o.instance).tag != inst.tag) continue;
      const WaveParams p = wave_named_params(inst.tag);
      const std::size_t c = o.c ? *o.c : o.mu ? wave_choose_c(*o.mu).c : inst.c;
      const std::size_t pk = wave_pk_bytes(p);
      const std::size_t vk = wave_vk_bytes(p.n, c);
      std::snprintf(line, sizeof line, "%-9s %6u %6zu %5zu %4zu %7.1f %10zu %7zu %7zu %6.2f\n",
                    inst.name, inst.lambda, p.n, p.k, c, c * std::log2(3.0), pk,
                    wave_ck_bytes(p, c), vk, static_cast<double>(pk) / vk);
      std::cout << line;
    }
    return 0;
  }
  const unsigned mu = o.mu ? static_cast<unsigned>(*o.mu) : 31;
  const auto [lo, hi] = count_primes_bounds(mu);
  std::snprintf(line, sizeof line, "rw  mu=%u  log2 #primes in [%.2f, %.2f]  |CK|=8  |VK|=20\n", mu,
                lo, hi);
  std::cout << line;
  return 0;
}

// keygen

int cmd_keygen(const Options& o) {
  Rng rng(o.seed);
  if (o.scheme == Scheme::kRw) {
    const RwKeypair kp = rw_keygen(o.bits, rng);
    save(o.out, Scheme::kRw, FileKind::kPublicKey, 0, encode_rw_pk(kp.n));
    if (!o.sk.empty()) save(o.sk, Scheme::kRw, FileKind::kSecretKey, 0, encode_rw_sk(kp));
    return 0;
  }
  if (o.scheme == Scheme::kSquirrels) {
    if (is_toy(o.instance)) {
      SquirrelsToyOptions opts;
      const SquirrelsToyKey key = squirrels_toy_keygen(o.n ? o.n : 12, o.bound, rng, opts);
      save(o.out, Scheme::kSquirrels, FileKind::kPublicKey, 0, encode_squirrels_pk(key.pk));
      if (!o.params.empty()) {
        save(o.params, Scheme::kSquirrels, FileKind::kParams, 0,
             encode_squirrels_params(key.params));
      }
      if (!o.sk.empty()) {
        save(o.sk, Scheme::kSquirrels, FileKind::kSecretKey, 0,
             encode_squirrels_toy_secret(key.secret));
      }
      std::cerr << "toy lattice: n=" << key.params.n << " s=" << key.params.s()
                << " attempts=" << key.stats.attempts << "\n";
      return 0;
    }
    if (!o.sk.empty()) throw Error(ErrorCode::kInvalidArgument, "named instances have no signer");
    const SquirrelsParams p = squirrels_named_params(squirrels_instance(o.instance).tag);
    save(o.out, Scheme::kSquirrels, FileKind::kPublicKey, p.tag,
         encode_squirrels_pk(squirrels_random_public_key(p, rng)));
    if (!o.params.empty()) {
      save(o.params, Scheme::kSquirrels, FileKind::kParams, p.tag, encode_squirrels_params(p));
    }
    return 0;
  }
  WaveParams p;
  if (is_toy(o.instance)) {
    p = {kWaveToyTag, o.n ? o.n : 24, o.k ? o.k : 12, o.w ? o.w : 16};
  } else {
    p = wave_named_params(wave_instance(o.instance).tag);
  }
  const WavePublicKey pk = wave_toy_keygen(p, rng);
  const Bytes pke = encode_wave_pk(pk);
  save(o.out, Scheme::kWave, FileKind::kPublicKey, p.tag, pke);
  if (!o.params.empty()) save(o.params, Scheme::kWave, FileKind::kParams, p.tag, encode_wave_params(p));
  if (!o.sk.empty()) save(o.sk, Scheme::kWave, FileKind::kSecretKey, p.tag, pke);
  return 0;
}

// ck-gen / vk-gen

int cmd_ckgen(const Options& o) {
  Rng rng(o.seed);
  if (o.scheme == Scheme::kRw) {
    const unsigned mu = o.mu ? static_cast<unsigned>(*o.mu) : 31;
    save(o.out, Scheme::kRw, FileKind::kCompressionKey, 0, encode_rw_ck(rw_ckeygen(mu, rng)));
    return 0;
  }
  if (o.scheme == Scheme::kSquirrels) {
    const SquirrelsParams p = squirrels_params(o);
    const SquirrelsCompressionKey ck = squirrels_ckeygen(p, squirrels_t(o, p), rng);
    save(o.out, Scheme::kSquirrels, FileKind::kCompressionKey, p.tag, encode_squirrels_ck(ck));
    return 0;
  }
  const WaveParams p = wave_params(o);
  const WaveCompressionKey ck = wave_ckeygen(p, wave_c(o, p), rng);
  save(o.out, Scheme::kWave, FileKind::kCompressionKey, p.tag, encode_wave_ck(ck));
  return 0;
}

int cmd_vkgen(const Options& o) {
  if (o.scheme == Scheme::kRw) {
    const WordModulus ell = decode_rw_ck(load(o.ck, Scheme::kRw, FileKind::kCompressionKey).payload);
    const BigInt n = decode_rw_pk(load(o.pk, Scheme::kRw, FileKind::kPublicKey).payload);
    save(o.out, Scheme::kRw, FileKind::kVerificationKey, 0, encode_rw_vk(rw_vkeygen(ell, n)));
    return 0;
  }
  if (o.scheme == Scheme::kSquirrels) {
    const SquirrelsParams p = squirrels_params(o);
    const SquirrelsCompressionKey ck = decode_squirrels_ck(
        load(o.ck, Scheme::kSquirrels, FileKind::kCompressionKey).payload, p);
    const SquirrelsPublicKey pk =
        decode_squirrels_pk(load(o.pk, Scheme::kSquirrels, FileKind::kPublicKey).payload, p);
    save(o.out, Scheme::kSquirrels, FileKind::kVerificationKey, p.tag,
         encode_squirrels_vk(squirrels_vkeygen(ck, pk, p)));
    return 0;
  }
  const WaveParams p = wave_params(o);
  const WaveCompressionKey ck =
      decode_wave_ck(load(o.ck, Scheme::kWave, FileKind::kCompressionKey).payload, p);
  const WavePublicKey pk = decode_wave_pk(load(o.pk, Scheme::kWave, FileKind::kPublicKey).payload, p);
  save(o.out, Scheme::kWave, FileKind::kVerificationKey, p.tag,
       encode_wave_vk(wave_vkeygen(pk, ck, p)));
  return 0;
}

// sign-toy / verify / cverify

int cmd_sign(const Options& o) {
  Rng rng(o.seed);
  const Bytes m = message(o);
  if (o.scheme == Scheme::kRw) {
    const RwKeypair kp = decode_rw_sk(load(o.sk, Scheme::kRw, FileKind::kSecretKey).payload);
    save(o.out, Scheme::kRw, FileKind::kSignature, 0, encode_rw_sig(rw_sign(kp, m, rng)));
    return 0;
  }
  if (o.scheme == Scheme::kSquirrels) {
    const SquirrelsParams p = squirrels_params(o);
    const SquirrelsToySecret sk = decode_squirrels_toy_secret(
        load(o.sk, Scheme::kSquirrels, FileKind::kSecretKey).payload);
    save(o.out, Scheme::kSquirrels, FileKind::kSignature, p.tag,
         encode_squirrels_sig(squirrels_toy_sign(sk, m, p, rng)));
    return 0;
  }
  const WaveParams p = wave_params(o);
  const WavePublicKey sk = decode_wave_pk(load(o.sk, Scheme::kWave, FileKind::kSecretKey).payload, p);
  save(o.out, Scheme::kWave, FileKind::kSignature, p.tag,
       encode_wave_sig(wave_toy_sign(sk, m, p, rng)));
  return 0;
}

int cmd_verify(const Options& o) {
  if (o.scheme == Scheme::kRw) {
    const BigInt n = decode_rw_pk(load(o.pk, Scheme::kRw, FileKind::kPublicKey).payload);
    const RwSignature sig = decode_rw_sig(load(o.sig, Scheme::kRw, FileKind::kSignature).payload);
    return report(rw_verify(sig, message(o), n));
  }
  if (o.scheme == Scheme::kSquirrels) {
    const SquirrelsParams p = squirrels_params(o);
    const SquirrelsPublicKey pk =
        decode_squirrels_pk(load(o.pk, Scheme::kSquirrels, FileKind::kPublicKey).payload, p);
    const SquirrelsSignature sig =
        decode_squirrels_sig(load(o.sig, Scheme::kSquirrels, FileKind::kSignature).payload, p);
    return report(squirrels_verify(sig, message(o), pk, p));
  }
  const WaveParams p = wave_params(o);
  const WavePublicKey pk = decode_wave_pk(load(o.pk, Scheme::kWave, FileKind::kPublicKey).payload, p);
  const WaveSignature sig = decode_wave_sig(load(o.sig, Scheme::kWave, FileKind::kSignature).payload, p);
  return report(wave_verify(sig, message(o), pk, p));
}

int cmd_cverify(const Options& o) {
  if (o.scheme == Scheme::kRw) {
    const RwVerificationKey vk =
        decode_rw_vk(load(o.vk, Scheme::kRw, FileKind::kVerificationKey).payload);
    const RwSignature sig = decode_rw_sig(load(o.sig, Scheme::kRw, FileKind::kSignature).payload);
    return report(rw_cverify(sig, message(o), vk));
  }
  if (o.scheme == Scheme::kSquirrels) {
    const SquirrelsParams p = squirrels_params(o);
    const SquirrelsVerificationKey vk = decode_squirrels_vk(
        load(o.vk, Scheme::kSquirrels, FileKind::kVerificationKey).payload, p);
    const SquirrelsSignature sig =
        decode_squirrels_sig(load(o.sig, Scheme::kSquirrels, FileKind::kSignature).payload, p);
    return report(squirrels_cverify(sig, message(o), vk, p));
  }
  const WaveParams p = wave_params(o);
  const WaveVerificationKey vk =
      decode_wave_vk(load(o.vk, Scheme::kWave, FileKind::kVerificationKey).payload, p);
  const WaveSignature sig = decode_wave_sig(load(o.sig, Scheme::kWave, FileKind::kSignature).payload, p);
  return report(wave_cverify(sig, message(o), vk, p));
}

// bench-ops

void print_tallies(const OpTally& v, const OpTally& cv, double reference, const char* label) {
  const double ratio = static_cast<double>(v.word_mul) / static_cast<double>(cv.word_mul);
  std::printf("verify   word_mul=%llu reductions=%llu\n",
              static_cast<unsigned long long>(v.word_mul),
              static_cast<unsigned long long>(v.reductions));
  std::printf("cverify  word_mul=%llu reductions=%llu\n",
              static_cast<unsigned long long>(cv.word_mul),
              static_cast<unsigned long long>(cv.reductions));
  std::printf("ratio    %.2f  (%s = %.2f)\n", ratio, label, reference);
}

int cmd_bench_ops(const Options& o) {
  Rng rng(o.seed);
  const ByteView m = as_bytes("bench-ops");
  if (o.scheme == Scheme::kSquirrels) {
    const SquirrelsParams p = squirrels_params(o);
    const std::size_t t = squirrels_t(o, p);
    const SquirrelsPublicKey pk = squirrels_random_public_key(p, rng);
    const SquirrelsVerificationKey vk = squirrels_vkeygen(squirrels_ckeygen(p, t, rng), pk, p);
    SquirrelsSignature sig{rng.bytes(kSquirrelsSaltBytes), std::vector<std::int32_t>(p.n)};
    // Uniform entries in [-a, a] have expected squared norm n a^2 / 3 <= beta^2 / 2.
    const auto a = static_cast<std::uint64_t>(
        std::sqrt(1.5 * static_cast<double>(p.beta_sq) / static_cast<double>(p.n)));
    for (auto& v : sig.s) v = static_cast<std::int32_t>(rng.uniform(2 * a + 1)) - static_cast<std::int32_t>(a);
    OpTally tv, tc;
    squirrels_verify(sig, m, pk, p, &tv);
    squirrels_cverify(sig, m, vk, p, &tc);
    std::printf("%s  s=%zu t=%zu\n", p.name().c_str(), p.s(), t);
    print_tallies(tv, tc, static_cast<double>(p.s()) / static_cast<double>(t + 1), "s/(t+1)");
    return 0;
  }
  if (o.scheme == Scheme::kWave) {
    const WaveParams p = wave_params(o);
    const std::size_t c = wave_c(o, p);
    const WavePublicKey pk = wave_toy_keygen(p, rng);
    const WaveVerificationKey vk = wave_vkeygen(pk, wave_ckeygen(p, c, rng), p);
    WaveSignature sig{rng.bytes(kWaveSaltBytes), TritVector(p.n)};
    std::vector<std::size_t> pos(p.n);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    for (std::size_t i = 0; i < p.w; ++i) {
      std::swap(pos[i], pos[i + rng.uniform(p.n - i)]);
      sig.s.set(pos[i], static_cast<unsigned>(1 + rng.uniform(2)));
    }
    OpTally tv, tc;
    wave_verify(sig, m, pk, p, &tv);
    wave_cverify(sig, m, vk, p, &tc);
    std::printf("%s  n-k=%zu c=%zu\n", p.name().c_str(), p.syndrome_len(), c);
    print_tallies(tv, tc, static_cast<double>(p.syndrome_len()) / static_cast<double>(2 * c),
                  "(n-k)/(2c)");
    return 0;
  }
  throw Error(ErrorCode::kInvalidArgument, "bench-ops supports squirrels and wave");
}

// simulate-forgery

int cmd_simulate(const Options& o) {
  SegpToyConfig cfg;
  cfg.scheme = o.scheme == Scheme::kWave ? SegpScheme::kWave : SegpScheme::kSquirrels;
  if (o.scheme == Scheme::kRw) throw Error(ErrorCode::kInvalidArgument, "no toy game for rw");
  cfg.dim = o.dim;
  cfg.codim = o.c ? *o.c : 2;
  cfg.prime_bits = o.prime_bits;
  cfg.query_bits = o.query_bits;
  cfg.queries = o.queries;
  const std::pair<SegpStrategy, const char*> strategies[] = {
      {SegpStrategy::kRandom, "random"},
      {SegpStrategy::kReplay, "replay"},
      {SegpStrategy::kScalarMultiple, "scalar-multiple"},
  };
  const auto [s_size, kappa] = segp_toy_family(cfg);
  std::printf("#S=%.0f kappa=%.0f queries=%zu trials=%zu\n", s_size, kappa, cfg.queries, o.trials);
  for (const auto& [strategy, name] : strategies) {
    Rng rng(o.seed);
    const SegpGameResult r = simulate_segp_game(cfg, strategy, o.trials, rng);
    std::printf("%-16s rate=%.5f sigma=%.5f bound=%.5f %s\n", name, r.rate, r.sigma, r.bound,
                r.rate <= r.bound + 3 * r.sigma ? "ok" : "EXCEEDS");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compressed verification toolkit"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Scheme> schemes = {
      {"rw", Scheme::kRw}, {"squirrels", Scheme::kSquirrels}, {"wave", Scheme::kWave}};

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", o.scheme, "rw, squirrels or wave")
        ->required()
        ->transform(CLI::CheckedTransformer(schemes, CLI::ignore_case));
    cmd->add_option("--instance", o.instance, "named instance or toy");
    cmd->add_option("--params", o.params, "parameter file");
    cmd->add_option("--seed", o.seed);
  };
  auto msg = [&](CLI::App* cmd) {
    auto* in = cmd->add_option("--in", o.in, "message file");
    cmd->add_option("--msg", o.msg, "message string")->excludes(in);
  };

  auto* params = app.add_subcommand("params", "print parameter rows");
  common(params);
  params->add_option("--t", o.t);
  params->add_option("--c", o.c);
  params->add_option("--mu", o.mu);

  auto* keygen = app.add_subcommand("keygen", "generate a public key (and toy signing key)");
  common(keygen);
  keygen->add_option("--out", o.out)->required();
  keygen->add_option("--sk", o.sk);
  keygen->add_option("--n", o.n, "toy dimension");
  keygen->add_option("--k", o.k, "toy Wave code dimension");
  keygen->add_option("--w", o.w, "toy Wave weight");
  keygen->add_option("--bound", o.bound, "toy Squirrels basis entry bound");
  keygen->add_option("--bits", o.bits, "Rabin-Williams modulus bits");

  auto* ckgen = app.add_subcommand("ck-gen", "generate a compression key");
  common(ckgen);
  ckgen->add_option("--t", o.t);
  ckgen->add_option("--c", o.c);
  ckgen->add_option("--mu", o.mu);
  ckgen->add_option("--out", o.out)->required();

  auto* vkgen = app.add_subcommand("vk-gen", "derive a verification key");
  common(vkgen);
  vkgen->add_option("--ck", o.ck)->required();
  vkgen->add_option("--pk", o.pk)->required();
  vkgen->add_option("--out", o.out)->required();

  auto* sign = app.add_subcommand("sign-toy", "sign with a toy key");
  common(sign);
  msg(sign);
  sign->add_option("--sk", o.sk)->required();
  sign->add_option("--out", o.out)->required();

  auto* verify = app.add_subcommand("verify", "verify against the public key");
  common(verify);
  msg(verify);
  verify->add_option("--pk", o.pk)->required();
  verify->add_option("--sig", o.sig)->required();

  auto* cverify = app.add_subcommand("cverify", "verify against the verification key");
  common(cverify);
  msg(cverify);
  cverify->add_option("--vk", o.vk)->required();
  cverify->add_option("--sig", o.sig)->required();

  auto* bench = app.add_subcommand("bench-ops", "operation tallies for verify and cverify");
  common(bench);
  bench->add_option("--t", o.t);
  bench->add_option("--c", o.c);
  bench->add_option("--mu", o.mu);

  auto* simulate = app.add_subcommand("simulate-forgery", "run the toy forgery game");
  common(simulate);
  simulate->add_option("--trials", o.trials);
  simulate->add_option("--c", o.c, "Wave codimension");
  simulate->add_option("--dim", o.dim, "Wave ambient dimension");
  simulate->add_option("--queries", o.queries);
  simulate->add_option("--prime-bits", o.prime_bits);
  simulate->add_option("--query-bits", o.query_bits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*params) return cmd_params(o);
    if (*keygen) return cmd_keygen(o);
    if (*ckgen) return cmd_ckgen(o);
    if (*vkgen) return cmd_vkgen(o);
    if (*sign) return cmd_sign(o);
    if (*verify) return cmd_verify(o);
    if (*cverify) return cmd_cverify(o);
    if (*bench) return cmd_bench_ops(o);
    if (*simulate) return cmd_simulate(o);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
