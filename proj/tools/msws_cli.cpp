// Copyright 2026 The msws Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// msws: command-line front end over the libmsws C API.
//
//   msws gen      --n N | --s S [--x X] [--w W]  --count C  --format F
//   msws seed     count | check V | get N | emit --from A --to B [--out F]
//   msws selftest
//   msws attack   --k K --outputs N [--seed S] [--force]
//   msws bench    [--count C]
//
// Numeric flags take decimal or 0x-prefixed hex.

#include <cerrno>
#include <charconv>
#include <chrono>
#include <cinttypes>
#include <csignal>
#include <cstdio>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "msws/msws.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(std::string_view flag, std::string_view text) {
  int base = 10;
  std::string_view digits = text;
  if (digits.size() > 2 && digits[0] == '0' &&
      (digits[1] == 'x' || digits[1] == 'X')) {
    base = 16;
    digits.remove_prefix(2);
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), v, base);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size()) {
    throw UsageError(std::string(flag) + ": not a 64-bit unsigned number: '" +
                     std::string(text) + "'");
  }
  return v;
}

int report_status(msws_status st) {
  std::fprintf(stderr, "msws: %s: %s\n", msws_status_name(st),
               msws_last_error());
  return kExitFail;
}

// Buffered writer on fd 1. A closed pipe ends the run successfully.
class Sink {
 public:
  Sink() { buf_.reserve(kCapacity); }

  // False once the reader has gone away.
  bool put(const void* data, std::size_t n) {
    const auto* p = static_cast<const char*>(data);
    buf_.insert(buf_.end(), p, p + n);
    return buf_.size() < kCapacity || flush();
  }

  bool flush() {
    std::size_t off = 0;
    while (off < buf_.size()) {
      const ssize_t r = ::write(STDOUT_FILENO, buf_.data() + off,
                                buf_.size() - off);
      if (r < 0) {
        if (errno == EINTR) continue;
        closed_ = true;
        if (errno != EPIPE) io_error_ = errno;
        buf_.clear();
        return false;
      }
      off += static_cast<std::size_t>(r);
    }
    buf_.clear();
    return true;
  }

  bool closed() const { return closed_; }
  int io_error() const { return io_error_; }

 private:
  static constexpr std::size_t kCapacity = 1 << 16;
  std::vector<char> buf_;
  bool closed_ = false;
  int io_error_ = 0;
};

struct GenArgs {
  std::optional<std::string> n, x, w, s;
  std::string count = "0";
  std::string format = "raw32le";
};

int cmd_gen(const GenArgs& a) {
  if (a.n && (a.x || a.w || a.s)) {
    throw UsageError("gen: --n cannot be combined with --x/--w/--s");
  }
  if ((a.x || a.w) && !a.s) {
    throw UsageError("gen: explicit state needs --s");
  }
  const std::uint64_t count = parse_u64("--count", a.count);

  msws_gen* gen = nullptr;
  msws_status st;
  if (a.s) {
    st = msws_gen_create_state(a.x ? parse_u64("--x", *a.x) : 0,
                               a.w ? parse_u64("--w", *a.w) : 0,
                               parse_u64("--s", *a.s), &gen);
  } else {
    st = msws_gen_create_stream(a.n ? parse_u64("--n", *a.n) : 0, &gen);
  }
  if (st != MSWS_OK) return report_status(st);
  std::unique_ptr<msws_gen, decltype(&msws_gen_destroy)> owner(
      gen, &msws_gen_destroy);

  using Emit = bool (*)(msws_gen*, Sink&);
  Emit emit = nullptr;
  if (a.format == "raw32le") {
    emit = [](msws_gen* g, Sink& out) {
      std::uint8_t b[4];
      msws_gen_fill_bytes(g, b, 4);
      return out.put(b, 4);
    };
  } else if (a.format == "raw64le") {
    emit = [](msws_gen* g, Sink& out) {
      const std::uint64_t v = msws_gen_next64(g);
      std::uint8_t b[8];
      for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
      return out.put(b, 8);
    };
  } else if (a.format == "hex") {
    emit = [](msws_gen* g, Sink& out) {
      char line[16];
      const int n = std::snprintf(line, sizeof line, "%08" PRIx32 "\n",
                                  msws_gen_next32(g));
      return out.put(line, static_cast<std::size_t>(n));
    };
  } else if (a.format == "hex64") {
    emit = [](msws_gen* g, Sink& out) {
      char line[24];
      const int n = std::snprintf(line, sizeof line, "%016" PRIx64 "\n",
                                  msws_gen_next64(g));
      return out.put(line, static_cast<std::size_t>(n));
    };
  } else if (a.format == "float32res") {
    emit = [](msws_gen* g, Sink& out) {
      char line[40];
      const int n = std::snprintf(line, sizeof line, "%.17g\n",
                                  msws_to_unit32(msws_gen_next32(g)));
      return out.put(line, static_cast<std::size_t>(n));
    };
  } else if (a.format == "float53res") {
    emit = [](msws_gen* g, Sink& out) {
      char line[40];
      const int n = std::snprintf(line, sizeof line, "%.17g\n",
                                  msws_to_unit53(msws_gen_next64(g)));
      return out.put(line, static_cast<std::size_t>(n));
    };
  } else {
    throw UsageError("gen: unknown format '" + a.format +
                     "' (raw32le, raw64le, hex, hex64, float32res, "
                     "float53res)");
  }

  Sink out;
  for (std::uint64_t i = 0; count == 0 || i < count; ++i) {
    if (!emit(gen, out)) break;
  }
  if (!out.closed()) out.flush();
  if (out.io_error() != 0) {
    std::fprintf(stderr, "msws: write failed: %s\n",
                 std::strerror(out.io_error()));
    return kExitFail;
  }
  return kExitOk;
}

int cmd_seed_count() {
  std::uint64_t upper = 0, lower = 0, total = 0;
  msws_count_constants(&upper, &lower, &total);
  std::printf("%" PRIu64 " %" PRIu64 " %" PRIu64 "\n", upper, lower, total);
  return kExitOk;
}

int cmd_seed_check(const std::string& text) {
  const std::uint64_t v = parse_u64("constant", text);
  const char* reason = nullptr;
  if (msws_check_constant(v, &reason)) {
    std::printf("accept\n");
    return kExitOk;
  }
  std::printf("reject: %s\n", reason);
  return kExitFail;
}

int cmd_seed_get(const std::string& text) {
  std::uint64_t s = 0;
  const msws_status st = msws_init_rand_digits(parse_u64("index", text), &s);
  if (st != MSWS_OK) return report_status(st);
  std::printf("0x%016" PRIx64 "\n", s);
  return kExitOk;
}

int cmd_seed_emit(const std::string& from, const std::string& to,
                  const std::string& path) {
  const std::uint64_t a = parse_u64("--from", from);
  const std::uint64_t b = parse_u64("--to", to);
  if (path == "-") {
    if (a > b) throw UsageError("seed emit: --from exceeds --to");
    for (std::uint64_t n = a; n < b; ++n) {
      std::uint64_t s = 0;
      const msws_status st = msws_init_rand_digits(n, &s);
      if (st != MSWS_OK) return report_status(st);
      std::printf("0x%016" PRIx64 ",\n", s);
    }
    return kExitOk;
  }
  const msws_status st = msws_seed_file_write(path.c_str(), a, b);
  return st == MSWS_OK ? kExitOk : report_status(st);
}

int cmd_selftest(const std::string& fault) {
  unsigned flags = 0;
  if (fault == "golden-sparse-seed") {
    flags |= MSWS_SELFTEST_CORRUPT_GOLDEN;
  } else if (!fault.empty()) {
    throw UsageError("selftest: unknown fault '" + fault + "'");
  }
  std::vector<std::string> failed;
  auto on_check = [](const char* name, int passed, const char* detail,
                     void* user) {
    std::printf("%s %-24s %s\n", passed ? "PASS" : "FAIL", name, detail);
    if (!passed) static_cast<std::vector<std::string>*>(user)->push_back(name);
  };
  int all = 0;
  const msws_status st = msws_selftest(flags, on_check, &failed, &all);
  if (st != MSWS_OK) return report_status(st);
  if (all) {
    std::printf("selftest: ok\n");
    return kExitOk;
  }
  std::string names;
  for (const auto& n : failed) names += (names.empty() ? "" : ", ") + n;
  std::printf("selftest: FAILED (%s)\n", names.c_str());
  return kExitFail;
}

int cmd_attack(unsigned k, const std::string& outputs, const std::string& seed,
               bool force) {
  const std::uint64_t n = parse_u64("--outputs", outputs);
  if (2 * k > 24 && !force) {
    std::fprintf(stderr,
                 "msws: attack at k=%u would examine 2^%u candidates, which "
                 "is infeasible; pass --force to run anyway\n",
                 k, msws_attack_cost_log2(k));
    return kExitFail;
  }
  msws_attack_report r{};
  const msws_status st =
      msws_attack_demo(k, static_cast<std::size_t>(n),
                       parse_u64("--seed", seed), force ? 1 : 0, &r);
  if (st != MSWS_OK) return report_status(st);
  std::printf("k: %u (%u-bit state words)\n", r.k, 2 * r.k);
  std::printf("outputs: %zu\n", r.outputs);
  std::printf("hidden state: x=0x%" PRIx64 " w=0x%" PRIx64 " s=0x%" PRIx64
              "\n",
              r.hidden_x, r.hidden_w, r.hidden_s);
  std::printf("cost model: 2^%u; at k=32: 2^%u\n", msws_attack_cost_log2(r.k),
              msws_attack_cost_log2(32));
  std::printf("survivors: %zu (distinct futures: %zu)\n", r.survivors,
              r.distinct_futures);
  std::printf("recovered: %s; candidates: %" PRIu64 "\n",
              r.recovered ? "yes" : "no", r.candidates_examined);
  std::fprintf(stderr, "wall time: %.3f s\n", r.seconds);
  return r.recovered ? kExitOk : kExitFail;
}

int cmd_bench(const std::string& count_text) {
  const std::uint64_t count = parse_u64("--count", count_text);
  msws_gen* gen = nullptr;
  msws_status st = msws_gen_create_stream(0, &gen);
  if (st != MSWS_OK) return report_status(st);
  msws_pair* pair = nullptr;
  std::uint64_t s1 = 0, s2 = 0;
  msws_init_rand_digits(0, &s1);
  msws_init_rand_digits(1, &s2);
  st = msws_pair_create(s1, s1, s1, s2, s2, s2, &pair);
  if (st != MSWS_OK) {
    msws_gen_destroy(gen);
    return report_status(st);
  }

  auto time = [count](auto&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t acc = 0;
    for (std::uint64_t i = 0; i < count; ++i) acc += body();
    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    return std::pair{secs, acc};
  };
  const auto [t32, a32] = time([&] { return std::uint64_t{msws_gen_next32(gen)}; });
  const auto [t64d, a64d] = time([&] { return msws_gen_next64(gen); });
  const auto [t64p, a64p] = time([&] { return msws_pair_next64(pair); });
  std::printf("outputs per variant: %" PRIu64 "\n", count);
  std::printf("msws32        %.3f s  %.3g outputs/s\n", t32, count / t32);
  std::printf("msws64 double %.3f s  %.3g outputs/s\n", t64d, count / t64d);
  std::printf("msws64 paired %.3f s  %.3g outputs/s\n", t64p, count / t64p);
  std::printf("checksum %016" PRIx64 "\n", a32 ^ a64d ^ a64p);
  msws_pair_destroy(pair);
  msws_gen_destroy(gen);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGPIPE, SIG_IGN);

  CLI::App app{"Middle square Weyl sequence random number generator"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Emit generator output to stdout");
  gen->add_option("--n", gen_args.n, "Stream index");
  gen->add_option("--x", gen_args.x, "Initial accumulator (default 0)");
  gen->add_option("--w", gen_args.w, "Initial Weyl value (default 0)");
  gen->add_option("--s", gen_args.s, "Odd Weyl increment");
  gen->add_option("--count", gen_args.count,
                  "Number of outputs; 0 streams until the pipe closes")
      ->capture_default_str();
  gen->add_option("--format", gen_args.format,
                  "raw32le, raw64le, hex, hex64, float32res, float53res")
      ->capture_default_str();

  auto* seed = app.add_subcommand("seed", "Seed constants");
  seed->require_subcommand(1);
  auto* seed_count = seed->add_subcommand("count", "Print constant counts");
  std::string check_value;
  auto* seed_check =
      seed->add_subcommand("check", "Validate a candidate Weyl increment");
  seed_check->add_option("constant", check_value)->required();
  std::string get_index;
  auto* seed_get = seed->add_subcommand("get", "Constant for stream index");
  seed_get->add_option("index", get_index)->required();
  std::string emit_from, emit_to, emit_out = "-";
  auto* seed_emit =
      seed->add_subcommand("emit", "Write constants for [from, to)");
  seed_emit->add_option("--from", emit_from)->required();
  seed_emit->add_option("--to", emit_to)->required();
  seed_emit->add_option("--out", emit_out, "Output file, - for stdout")
      ->capture_default_str();

  std::string fault;
  auto* selftest = app.add_subcommand("selftest", "Run built-in checks");
  selftest->add_option("--inject-fault", fault)->group("");

  unsigned attack_k = 8;
  std::string attack_outputs = "16", attack_seed = "1";
  bool attack_force = false;
  auto* attack =
      app.add_subcommand("attack", "Reduced-width state recovery demo");
  attack->add_option("--k", attack_k, "Half width: 4, 8, 12 or 16")
      ->capture_default_str();
  attack->add_option("--outputs", attack_outputs, "Known outputs")
      ->capture_default_str();
  attack->add_option("--seed", attack_seed, "Hidden-state seed")
      ->capture_default_str();
  attack->add_flag("--force", attack_force, "Run past the feasibility limit");

  std::string bench_count = "100000000";
  auto* bench = app.add_subcommand("bench", "Informal throughput benchmark");
  bench->add_option("--count", bench_count, "Outputs per generator")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitFail;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_args);
    if (seed_count->parsed()) return cmd_seed_count();
    if (seed_check->parsed()) return cmd_seed_check(check_value);
    if (seed_get->parsed()) return cmd_seed_get(get_index);
    if (seed_emit->parsed()) return cmd_seed_emit(emit_from, emit_to, emit_out);
    if (selftest->parsed()) return cmd_selftest(fault);
    if (attack->parsed()) {
      return cmd_attack(attack_k, attack_outputs, attack_seed, attack_force);
    }
    if (bench->parsed()) return cmd_bench(bench_count);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "msws: %s\n", e.what());
    return kExitFail;
  }
  return kExitFail;
}
