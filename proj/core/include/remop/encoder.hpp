#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "remop/matrix.hpp"
#include "remop/rng.hpp"

namespace remop {

// Reserved token ids. Hashed tokens land in [3, vocab_size).
constexpr int kPadId = 0;
constexpr int kBosId = 1;
constexpr int kUnkId = 2;

struct EncoderConfig {
  int layers = 4;
  int hidden_dim = 64;
  int heads = 4;
  int ffn_dim = 256;
  int vocab_size = 1024;
  int max_seq_len = 64;
  int prompt_len = 16;
  uint64_t seed = 1;

  int head_dim() const { return hidden_dim / heads; }
  void validate() const;
};

// Trainable per-layer prefix parameters; the physical realization of a
// retrieval module. Row layout of values: layer-major, the layer's P
// key-prefix rows followed by its P value-prefix rows.
struct PromptStack {
  int layers = 0;
  int prompt_len = 0;
  int dim = 0;
  Matrix values;  // (layers * 2 * prompt_len) x dim

  static PromptStack zeros(int layers, int prompt_len, int dim);
  static PromptStack gaussian(int layers, int prompt_len, int dim, Rng& rng, double stddev = 0.02);

  int key_row(int layer) const { return layer * 2 * prompt_len; }
  int value_row(int layer) const { return layer * 2 * prompt_len + prompt_len; }
  bool shape_matches(const EncoderConfig& config) const;
  bool same_shape(const PromptStack& other) const;
};

struct LayerWeights {
  Matrix wq, wk, wv, wo;  // hidden x hidden
  Matrix w1;              // hidden x ffn
  Matrix w2;              // ffn x hidden
  std::vector<double> b1, b2;
  std::vector<double> ln1_gain, ln1_bias, ln2_gain, ln2_bias;
};

// The shared transformer. FROZEN after initialization: training never
// touches these weights, which digest() makes checkable at the bit level.
struct Backbone {
  EncoderConfig config;
  Matrix embedding;  // vocab x hidden
  std::vector<LayerWeights> layers;
  std::vector<double> final_ln_gain, final_ln_bias;

  static Backbone init(const EncoderConfig& config);
  std::string digest() const;
};

struct Embedding {
  std::vector<double> values;
  double norm = 0.0;

  static Embedding from_values(std::vector<double> v);
};

// Per-encode activation record; holds exactly what the hand-derived
// backward pass needs. Also exposes attention rows for tests.
struct LayerNormCache {
  Matrix xhat;
  std::vector<double> inv_std;
};

struct LayerCache {
  Matrix x_in;
  LayerNormCache ln1;
  Matrix q;                       // n x hidden
  std::vector<Matrix> key_full;   // per head, (P+n) x head_dim
  std::vector<Matrix> value_full; // per head, (P+n) x head_dim
  std::vector<Matrix> attn;       // per head, n x (P+n)
  Matrix x_mid;
  LayerNormCache ln2;
  Matrix ffn_pre;                 // n x ffn
};

struct ForwardCache {
  int n = 0;
  std::vector<LayerCache> layers;
  std::vector<double> final_xhat;  // BOS row of the final layer norm
  double final_inv_std = 0.0;
};

// Lowercase whitespace tokenizer with FNV-1a hash buckets; BOS prepended,
// truncated to max_seq_len. Empty text yields [BOS].
std::vector<int> tokenize(std::string_view text, const EncoderConfig& config);

// Deep-prefix encoding: at every layer the prompt's P key rows and P
// value rows are prepended to that layer's attention keys/values. Real
// tokens attend to prefix positions; prefix positions are never queried.
// Output is the BOS hidden state after the final layer norm.
Embedding encode(const std::vector<int>& tokens, const PromptStack& prompt, const Backbone& backbone);
Embedding encode(const std::vector<int>& tokens, const PromptStack& prompt, const Backbone& backbone,
                 ForwardCache& cache);

// Gradient of a scalar objective w.r.t. the prompt values, given the
// gradient w.r.t. the pooled output. Returns a (layers*2*P) x hidden
// matrix matching PromptStack::values.
Matrix encode_backward(const ForwardCache& cache, const Backbone& backbone,
                       std::span<const double> d_pooled);

// Inner-product relevance score between query and passage embeddings.
double score(const Embedding& q, const Embedding& p);

double gelu(double x);
double gelu_grad(double x);

}  // namespace remop
