#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bipolkit/textprep.hpp"

namespace bipolkit {

struct Prediction {
    std::uint64_t index = 0;
    Label label = Label::unbiased;
    std::optional<double> score;  // probability of the biased class
};

// Aligned 1:1 with the corpus it was produced for.
using PredictionSet = std::vector<Prediction>;

struct ConfusionCounts {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t tn = 0;
    std::uint64_t fn = 0;
    std::uint64_t total() const { return tp + fp + tn + fn; }
};

// Multinomial bag-of-words classifier with additive smoothing. One smoothed
// pseudo-token per class absorbs out-of-vocabulary tokens.
class BowModel {
public:
    static BowModel train(const std::vector<CleanSample>& corpus, double smoothing = 1.0);

    Prediction predict_one(const CleanSample& sample) const;
    PredictionSet predict(const std::vector<CleanSample>& samples, int threads = 0) const;

    double smoothing() const { return smoothing_; }
    std::size_t vocabulary_size() const { return vocab_.size(); }

    std::string to_json_string() const;
    static BowModel from_json_string(const std::string& text);
    void save(const std::string& path) const;
    static BowModel load(const std::string& path);

private:
    double smoothing_ = 1.0;
    std::vector<std::string> vocab_;  // sorted
    std::unordered_map<std::string, std::size_t> vocab_index_;
    // index 0 = unbiased, 1 = biased
    double log_prior_[2] = {0, 0};
    std::vector<double> log_lik_[2];
    double oov_log_lik_[2] = {0, 0};

    void rebuild_index();
};

// CSV with header index,label[,score]; must cover every corpus index,
// extra rows are ignored.
PredictionSet load_predictions(const std::string& path, const std::vector<CleanSample>& corpus);

// Binary confusion with biased as the positive class; every prediction
// needs a gold label in the corpus.
ConfusionCounts confusion(const PredictionSet& pred, const std::vector<CleanSample>& gold);

// Unweighted mean of the per-class F1 scores. A class whose precision and
// recall are both zero contributes 0.
double macro_f1(const ConfusionCounts& cm);

// FP/(FP+TP); absent when nothing was predicted biased.
std::optional<double> positive_error_rate(const ConfusionCounts& cm);

}  // namespace bipolkit
