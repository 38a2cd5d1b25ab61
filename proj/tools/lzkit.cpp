#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lzkit/channel.hpp"
#include "lzkit/channel_io.hpp"
#include "lzkit/codec.hpp"
#include "lzkit/divergence.hpp"
#include "lzkit/ensemble.hpp"
#include "lzkit/errors.hpp"
#include "lzkit/inference.hpp"
#include "lzkit/parsing.hpp"
#include "lzkit/sequence.hpp"
#include "lzkit/sequential.hpp"

namespace {

using nlohmann::ordered_json;

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lzkit::InputError("cannot open file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw lzkit::InputError("cannot write file: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw lzkit::InputError("write failed: " + path);
}

std::string strip_trailing_newline(std::string text) {
  if (!text.empty() && text.back() == '\n') text.pop_back();
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return text;
}

/// How file bytes become symbols. Raw bytes are the default; analysis
/// commands then infer the alphabet as the distinct bytes present, in
/// ascending order, shared across all inputs of one invocation.
struct SequenceOptions {
  bool binary_ascii = false;
  std::string symbols;
};

void add_alphabet_flags(CLI::App* sub, SequenceOptions& opt) {
  auto* ascii = sub->add_flag(
      "--binary-ascii", opt.binary_ascii,
      "input is ASCII '0'/'1' text; one trailing newline is ignored");
  auto* symbols = sub->add_option(
      "--symbols", opt.symbols,
      "explicit alphabet: one symbol per character, in the order given; "
      "one trailing newline of the input is ignored");
  ascii->excludes(symbols);
  symbols->excludes(ascii);
}

lzkit::Alphabet distinct_bytes_alphabet(
    const std::vector<const std::vector<std::uint8_t>*>& files) {
  std::array<bool, 256> seen{};
  for (const auto* file : files)
    for (std::uint8_t b : *file) seen[b] = true;
  std::vector<std::uint8_t> mapping;
  for (int b = 0; b < 256; ++b)
    if (seen[b]) mapping.push_back(static_cast<std::uint8_t>(b));
  if (mapping.empty())
    throw lzkit::InputError("input is empty; cannot infer an alphabet");
  const std::uint32_t size = static_cast<std::uint32_t>(mapping.size());
  return lzkit::Alphabet(size, std::move(mapping));
}

lzkit::Sequence sequence_from_bytes(const std::vector<std::uint8_t>& bytes,
                                    const SequenceOptions& opt,
                                    const lzkit::Alphabet* shared) {
  if (opt.binary_ascii) {
    std::string text(bytes.begin(), bytes.end());
    return lzkit::Sequence::from_bits(strip_trailing_newline(std::move(text)));
  }
  if (!opt.symbols.empty()) {
    std::string text(bytes.begin(), bytes.end());
    return lzkit::Sequence::from_text(lzkit::Alphabet::from_symbols(opt.symbols),
                                      strip_trailing_newline(std::move(text)));
  }
  const lzkit::Alphabet alphabet =
      shared ? *shared : distinct_bytes_alphabet({&bytes});
  return lzkit::Sequence::from_bytes(alphabet, bytes);
}

lzkit::Sequence load_sequence(const std::string& path,
                              const SequenceOptions& opt) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  return sequence_from_bytes(bytes, opt, nullptr);
}

void emit(const ordered_json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  write_file(out_path, {reinterpret_cast<const std::uint8_t*>(text.data()),
                        text.size()});
}

std::optional<std::uint64_t> budget_override() {
  const char* raw = std::getenv("LZKIT_MEM_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0')
    throw lzkit::InputError("LZKIT_MEM_BUDGET must be a nonnegative integer");
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LZ78 individual-sequence toolkit"};
  app.require_subcommand(1);

  ordered_json report;
  std::string json_out;

  // compress
  auto* compress = app.add_subcommand(
      "compress", "LZ78-compress a file into a self-describing stream");
  std::string compress_in, compress_out;
  SequenceOptions compress_opt;
  compress->add_option("input", compress_in, "file to compress")->required();
  compress->add_option("-o,--output", compress_out,
                       "output stream path (default: input + .lz78)");
  add_alphabet_flags(compress, compress_opt);
  compress->callback([&] {
    const std::vector<std::uint8_t> bytes = read_file(compress_in);
    // Raw-byte streams always use the full byte alphabet: the stream header
    // carries only an alphabet size, so an inferred subset would not decode
    // elsewhere.
    lzkit::Sequence x =
        (compress_opt.binary_ascii || !compress_opt.symbols.empty())
            ? sequence_from_bytes(bytes, compress_opt, nullptr)
            : lzkit::Sequence::from_bytes(lzkit::Alphabet::bytes(), bytes);
    const lzkit::BitStream stream = lzkit::lz78_encode(x);
    const std::string out_path =
        compress_out.empty() ? compress_in + ".lz78" : compress_out;
    write_file(out_path, stream.to_bytes());
    report["schema_version"] = 1;
    report["command"] = "compress";
    report["n"] = stream.n;
    report["alphabet_size"] = stream.alphabet_size;
    report["payload_bits"] = stream.payload_bits;
    report["bits_per_symbol"] =
        stream.n == 0 ? 0.0
                      : static_cast<double>(stream.payload_bits) / stream.n;
    report["output"] = out_path;
  });

  // decompress
  auto* decompress = app.add_subcommand(
      "decompress", "decode a compressed stream back to the original file");
  std::string decompress_in, decompress_out;
  SequenceOptions decompress_opt;
  decompress->add_option("input", decompress_in, "stream to decode")
      ->required();
  decompress->add_option("-o,--output", decompress_out,
                         "output path (default: input minus .lz78)");
  add_alphabet_flags(decompress, decompress_opt);
  decompress->callback([&] {
    const std::vector<std::uint8_t> bytes = read_file(decompress_in);
    const lzkit::BitStream stream = lzkit::BitStream::from_bytes(bytes);
    lzkit::Alphabet alphabet = lzkit::Alphabet::bytes();
    if (decompress_opt.binary_ascii) {
      alphabet = lzkit::Alphabet::binary();
    } else if (!decompress_opt.symbols.empty()) {
      alphabet = lzkit::Alphabet::from_symbols(decompress_opt.symbols);
    }
    const lzkit::Sequence x = lzkit::lz78_decode(stream, alphabet);
    std::vector<std::uint8_t> out_bytes;
    out_bytes.reserve(x.size());
    for (lzkit::Symbol s : x.symbols()) out_bytes.push_back(alphabet.to_byte(s));
    std::string out_path = decompress_out;
    if (out_path.empty()) {
      out_path = decompress_in;
      if (out_path.size() > 5 && out_path.ends_with(".lz78"))
        out_path.resize(out_path.size() - 5);
      else
        out_path += ".out";
    }
    write_file(out_path, out_bytes);
    report["schema_version"] = 1;
    report["command"] = "decompress";
    report["n"] = stream.n;
    report["alphabet_size"] = stream.alphabet_size;
    report["output"] = out_path;
  });

  // encrypt
  auto* encrypt = app.add_subcommand(
      "encrypt", "XOR a compressed stream's payload with a one-time pad");
  std::string encrypt_in, encrypt_out, key_file;
  std::uint64_t key_seed = 0;
  bool key_seed_set = false;
  encrypt->add_option("input", encrypt_in, "compressed stream")->required();
  encrypt->add_option("-o,--output", encrypt_out,
                      "output path (default: input + .otp)");
  auto* kf = encrypt->add_option("--key-file", key_file,
                                 "key bytes, consumed most significant bit "
                                 "first");
  auto* ks = encrypt
                 ->add_option("--key-seed", key_seed,
                              "derive the key stream from a 64-bit seed")
                 ->each([&](const std::string&) { key_seed_set = true; });
  kf->excludes(ks);
  ks->excludes(kf);
  encrypt->callback([&] {
    if (key_file.empty() && !key_seed_set)
      throw lzkit::InputError("encrypt needs --key-file or --key-seed");
    const std::vector<std::uint8_t> bytes = read_file(encrypt_in);
    const lzkit::BitStream stream = lzkit::BitStream::from_bytes(bytes);
    lzkit::KeyStream key =
        key_file.empty() ? lzkit::KeyStream::from_seed(key_seed)
                         : lzkit::KeyStream::from_bytes(read_file(key_file));
    const lzkit::BitStream cipher = lzkit::otp_apply(stream, key);
    const std::string out_path =
        encrypt_out.empty() ? encrypt_in + ".otp" : encrypt_out;
    write_file(out_path, cipher.to_bytes());
    report["schema_version"] = 1;
    report["command"] = "encrypt";
    report["payload_bits"] = cipher.payload_bits;
    report["consumed_key_bits"] = key.consumed();
    report["output"] = out_path;
  });

  // complexity
  auto* complexity = app.add_subcommand(
      "complexity", "incremental phrase count and LZ complexity of a file");
  std::string complexity_in;
  SequenceOptions complexity_opt;
  complexity->add_option("input", complexity_in, "sequence file")->required();
  add_alphabet_flags(complexity, complexity_opt);
  complexity->add_option("-o,--output", json_out, "write the JSON here");
  complexity->callback([&] {
    const lzkit::Sequence x = load_sequence(complexity_in, complexity_opt);
    const lzkit::ParseResult parse = lzkit::incremental_parse(x);
    report["schema_version"] = 1;
    report["command"] = "complexity";
    report["n"] = x.size();
    report["c"] = parse.c;
    report["last_incomplete"] = parse.last_incomplete;
    report["rho_lz"] = lzkit::lz_complexity(x);
  });

  // divergence
  auto* divergence = app.add_subcommand(
      "divergence", "LZ divergence of one sequence from another");
  std::string div_x, div_y;
  SequenceOptions div_opt;
  divergence->add_option("x", div_x, "sequence under test")->required();
  divergence->add_option("y", div_y, "reference sequence")->required();
  add_alphabet_flags(divergence, div_opt);
  divergence->add_option("-o,--output", json_out, "write the JSON here");
  divergence->callback([&] {
    const std::vector<std::uint8_t> bx = read_file(div_x);
    const std::vector<std::uint8_t> by = read_file(div_y);
    std::optional<lzkit::Alphabet> shared;
    if (!div_opt.binary_ascii && div_opt.symbols.empty())
      shared = distinct_bytes_alphabet({&bx, &by});
    const lzkit::Sequence x =
        sequence_from_bytes(bx, div_opt, shared ? &*shared : nullptr);
    const lzkit::Sequence y =
        sequence_from_bytes(by, div_opt, shared ? &*shared : nullptr);
    report["schema_version"] = 1;
    report["command"] = "divergence";
    report["n"] = x.size();
    report["c_cross"] = lzkit::cross_parse(x, y).count;
    report["c_x"] = lzkit::incremental_parse(x).c;
    report["delta"] = lzkit::lz_divergence(x, y);
  });

  // classify
  auto* classify = app.add_subcommand(
      "classify", "nearest-divergence label from a corpus directory");
  std::string classify_in, corpus_dir;
  SequenceOptions classify_opt;
  classify->add_option("input", classify_in, "sequence to label")->required();
  classify->add_option("--corpus", corpus_dir,
                       "directory of training files; each file name is its "
                       "class label")
      ->required();
  add_alphabet_flags(classify, classify_opt);
  classify->add_option("-o,--output", json_out, "write the JSON here");
  classify->callback([&] {
    namespace fs = std::filesystem;
    std::vector<std::string> names;
    {
      std::error_code ec;
      for (const auto& entry : fs::directory_iterator(corpus_dir, ec)) {
        if (entry.is_regular_file()) names.push_back(entry.path().string());
      }
      if (ec)
        throw lzkit::InputError("cannot read corpus directory: " + corpus_dir);
    }
    if (names.empty())
      throw lzkit::InputError("corpus directory has no files: " + corpus_dir);
    std::sort(names.begin(), names.end());

    const std::vector<std::uint8_t> test_bytes = read_file(classify_in);
    std::vector<std::vector<std::uint8_t>> train_bytes;
    for (const std::string& name : names) train_bytes.push_back(read_file(name));

    std::optional<lzkit::Alphabet> shared;
    if (!classify_opt.binary_ascii && classify_opt.symbols.empty()) {
      std::vector<const std::vector<std::uint8_t>*> all = {&test_bytes};
      for (const auto& b : train_bytes) all.push_back(&b);
      shared = distinct_bytes_alphabet(all);
    }
    const lzkit::Alphabet* shared_ptr = shared ? &*shared : nullptr;

    const lzkit::Sequence x =
        sequence_from_bytes(test_bytes, classify_opt, shared_ptr);
    lzkit::LabeledCorpus corpus;
    for (std::size_t i = 0; i < names.size(); ++i) {
      corpus.classes.push_back(
          {fs::path(names[i]).filename().string(),
           sequence_from_bytes(train_bytes[i], classify_opt, shared_ptr)});
    }

    const lzkit::ClassificationResult result = lzkit::classify(x, corpus);
    report["schema_version"] = 1;
    report["command"] = "classify";
    report["label"] = result.label;
    ordered_json scores = ordered_json::object();
    for (const auto& [label, delta] : result.scores) scores[label] = delta;
    report["scores"] = scores;
  });

  // test-random
  auto* test_random = app.add_subcommand(
      "test-random", "LZ-complexity test of the fair-coin hypothesis");
  std::string tr_in;
  double tr_lambda = 0.1;
  SequenceOptions tr_opt;
  test_random->add_option("input", tr_in, "binary sequence file")->required();
  test_random->add_option("--lambda", tr_lambda, "decision threshold")
      ->capture_default_str();
  add_alphabet_flags(test_random, tr_opt);
  test_random->add_option("-o,--output", json_out, "write the JSON here");
  test_random->callback([&] {
    const lzkit::Sequence x = load_sequence(tr_in, tr_opt);
    const lzkit::TestVerdict v = lzkit::test_fair_coin(x, tr_lambda);
    report["schema_version"] = 1;
    report["command"] = "test-random";
    report["n"] = x.size();
    report["lambda"] = v.lambda;
    report["statistic"] = v.statistic;
    report["decision"] = v.decision == lzkit::Hypothesis::kNull ? "H0" : "H1";
  });

  // test-memoryless
  auto* test_memoryless = app.add_subcommand(
      "test-memoryless", "entropy-gap test of the memoryless hypothesis");
  std::string tm_in;
  double tm_lambda = 0.1;
  SequenceOptions tm_opt;
  test_memoryless->add_option("input", tm_in, "sequence file")->required();
  test_memoryless->add_option("--lambda", tm_lambda, "decision threshold")
      ->capture_default_str();
  add_alphabet_flags(test_memoryless, tm_opt);
  test_memoryless->add_option("-o,--output", json_out, "write the JSON here");
  test_memoryless->callback([&] {
    const lzkit::Sequence x = load_sequence(tm_in, tm_opt);
    const lzkit::TestVerdict v = lzkit::test_memoryless(x, tm_lambda);
    report["schema_version"] = 1;
    report["command"] = "test-memoryless";
    report["n"] = x.size();
    report["lambda"] = v.lambda;
    report["statistic"] = v.statistic;
    report["decision"] = v.decision == lzkit::Hypothesis::kNull ? "H0" : "H1";
  });

  // order-estimate
  auto* order_estimate = app.add_subcommand(
      "order-estimate", "smallest Markov order compatible with the LZ "
                        "complexity");
  std::string oe_in;
  double oe_lambda = 0.1;
  std::uint32_t oe_kmax = 8;
  SequenceOptions oe_opt;
  order_estimate->add_option("input", oe_in, "sequence file")->required();
  order_estimate->add_option("--lambda", oe_lambda, "decision threshold")
      ->capture_default_str();
  order_estimate->add_option("--k-max", oe_kmax, "largest order to try")
      ->capture_default_str();
  add_alphabet_flags(order_estimate, oe_opt);
  order_estimate->add_option("-o,--output", json_out, "write the JSON here");
  order_estimate->callback([&] {
    const lzkit::Sequence x = load_sequence(oe_in, oe_opt);
    const double rho = lzkit::lz_complexity(x);
    const std::optional<std::uint32_t> k_hat =
        lzkit::estimate_markov_order(x, oe_lambda, oe_kmax);
    ordered_json entropies = ordered_json::array();
    const std::uint32_t shown =
        k_hat ? *k_hat : std::min<std::uint32_t>(
                             oe_kmax, static_cast<std::uint32_t>(x.size() - 1));
    for (std::uint32_t k = 0; k <= shown; ++k)
      entropies.push_back(lzkit::empirical_entropy(x, k));
    report["schema_version"] = 1;
    report["command"] = "order-estimate";
    report["n"] = x.size();
    report["lambda"] = oe_lambda;
    report["k_max"] = oe_kmax;
    report["rho_lz"] = rho;
    report["h_k"] = entropies;
    if (k_hat)
      report["k_hat"] = *k_hat;
    else
      report["k_hat"] = nullptr;
  });

  // channel-sim
  auto* channel_sim = app.add_subcommand(
      "channel-sim", "Monte-Carlo comparison of maximum-likelihood and "
                     "parsing-based decoding");
  std::string channel_file;
  std::uint32_t cs_n = 0, cs_M = 0, cs_trials = 100;
  std::uint64_t cs_seed = 0;
  channel_sim->add_option("--channel", channel_file, "channel JSON file")
      ->required();
  channel_sim->add_option("--n", cs_n, "blocklength")->required();
  channel_sim->add_option("--M", cs_M, "codebook size")->required();
  channel_sim->add_option("--trials", cs_trials, "number of trials")
      ->capture_default_str();
  channel_sim->add_option("--seed", cs_seed, "master seed")
      ->capture_default_str();
  channel_sim->add_option("-o,--output", json_out, "write the JSON here");
  channel_sim->callback([&] {
    const lzkit::FsChannel ch = lzkit::load_channel(channel_file);
    const std::uint64_t budget =
        budget_override().value_or(lzkit::kDefaultSymbolBudget);
    const lzkit::ExperimentReport r =
        lzkit::run_experiment(ch, cs_n, cs_M, cs_trials, cs_seed, budget);
    report["schema_version"] = 1;
    report["command"] = "channel-sim";
    report["channel"] = channel_file;
    report["num_states"] = r.num_states;
    report["n"] = r.n;
    report["M"] = r.M;
    report["trials"] = r.trials;
    report["master_seed"] = r.master_seed;
    report["ml_errors"] = r.ml_errors;
    report["ziv_errors"] = r.ziv_errors;
    report["ml_rate"] = r.ml_rate;
    report["ziv_rate"] = r.ziv_rate;
    report["ml_ci95"] = r.ml_ci;
    report["ziv_ci95"] = r.ziv_ci;
  });

  // predict
  auto* predict = app.add_subcommand(
      "predict", "online bit prediction from the parsing trie");
  std::string pr_in, pr_mode = "deterministic";
  double pr_alpha = 1.0;
  std::uint64_t pr_seed = 0;
  SequenceOptions pr_opt;
  predict->add_option("input", pr_in, "binary sequence file")->required();
  predict->add_option("--alpha", pr_alpha, "estimator smoothing")
      ->capture_default_str();
  predict->add_option("--mode", pr_mode, "deterministic or randomized")
      ->check(CLI::IsMember({"deterministic", "randomized"}))
      ->capture_default_str();
  predict->add_option("--seed", pr_seed, "seed for randomized mode")
      ->capture_default_str();
  add_alphabet_flags(predict, pr_opt);
  predict->add_option("-o,--output", json_out, "write the JSON here");
  predict->callback([&] {
    const lzkit::Sequence x = load_sequence(pr_in, pr_opt);
    const lzkit::PredictionMode mode =
        pr_mode == "randomized" ? lzkit::PredictionMode::kRandomized
                                : lzkit::PredictionMode::kDeterministic;
    const lzkit::PredictionReport r =
        lzkit::predict_sequence(x, pr_alpha, mode, pr_seed);
    report["schema_version"] = 1;
    report["command"] = "predict";
    report["n"] = x.size();
    report["alpha"] = pr_alpha;
    report["mode"] = pr_mode;
    report["seed"] = pr_seed;
    report["errors"] = r.errors;
    report["error_rate"] = r.error_rate;
  });

  // gamble
  auto* gamble = app.add_subcommand(
      "gamble", "even-odds proportional gambling from the parsing trie");
  std::string gm_in;
  double gm_alpha = 1.0;
  SequenceOptions gm_opt;
  gamble->add_option("input", gm_in, "binary sequence file")->required();
  gamble->add_option("--alpha", gm_alpha, "estimator smoothing")
      ->capture_default_str();
  add_alphabet_flags(gamble, gm_opt);
  gamble->add_option("-o,--output", json_out, "write the JSON here");
  gamble->callback([&] {
    const lzkit::Sequence x = load_sequence(gm_in, gm_opt);
    const double growth = lzkit::gamble_sequence(x, gm_alpha);
    report["schema_version"] = 1;
    report["command"] = "gamble";
    report["n"] = x.size();
    report["alpha"] = gm_alpha;
    report["growth"] = growth;
  });

  // rd
  auto* rd = app.add_subcommand(
      "rd", "rate-distortion value under the universal ensemble (exhaustive)");
  std::string rd_in, rd_distortion = "hamming";
  double rd_D = 0.0;
  std::uint32_t rd_n = 0;
  SequenceOptions rd_opt;
  rd->add_option("--file", rd_in, "center sequence file")->required();
  rd->add_option("--D", rd_D, "per-symbol distortion level in [0,1]")
      ->required();
  rd->add_option("--n", rd_n, "expected length (cross-check, optional)");
  rd->add_option("--distortion", rd_distortion, "distortion measure")
      ->check(CLI::IsMember({"hamming"}))
      ->capture_default_str();
  add_alphabet_flags(rd, rd_opt);
  rd->add_option("-o,--output", json_out, "write the JSON here");
  rd->callback([&] {
    const lzkit::Sequence x = load_sequence(rd_in, rd_opt);
    if (rd_n != 0 && rd_n != x.size())
      throw lzkit::InputError("--n does not match the file length");
    const std::uint64_t budget =
        budget_override().value_or(lzkit::kDefaultEnumerationBudget);
    const lzkit::UniversalDistribution dist = lzkit::UniversalDistribution::build(
        static_cast<std::uint32_t>(x.size()), x.alphabet(), budget);
    report["schema_version"] = 1;
    report["command"] = "rd";
    report["n"] = x.size();
    report["alphabet_size"] = x.alphabet().size();
    report["D"] = rd_D;
    report["distortion"] = rd_distortion;
    report["z"] = dist.z();
    report["rho"] = lzkit::rd_point(x, rd_D, dist);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const lzkit::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lzkit::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  emit(report, json_out);
  return 0;
}
