#include "bipolkit/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "bipolkit/csv.hpp"
#include "bipolkit/errors.hpp"
#include "bipolkit/threads.hpp"

namespace bipolkit {

namespace {
constexpr int kUnbiased = 0;
constexpr int kBiased = 1;
}  // namespace

BowModel BowModel::train(const std::vector<CleanSample>& corpus, double smoothing) {
    if (smoothing <= 0) throw ConfigError("smoothing must be positive");
    if (corpus.empty()) throw DataError("training corpus is empty");

    std::map<std::string, std::uint64_t> counts[2];
    std::uint64_t token_total[2] = {0, 0};
    std::uint64_t docs[2] = {0, 0};
    for (const auto& sample : corpus) {
        if (!sample.label) {
            throw DataError("sample " + std::to_string(sample.index) + " has no label");
        }
        const int c = *sample.label == Label::biased ? kBiased : kUnbiased;
        ++docs[c];
        for (auto& token : tokenize(sample.text)) {
            ++counts[c][std::move(token)];
            ++token_total[c];
        }
    }
    if (docs[kBiased] == 0 || docs[kUnbiased] == 0) {
        throw DataError("training corpus needs both classes, got only '" +
                        std::string(label_to_string(docs[kBiased] ? Label::biased
                                                                  : Label::unbiased)) +
                        "'");
    }

    BowModel model;
    model.smoothing_ = smoothing;
    for (const auto& [token, n] : counts[kUnbiased]) model.vocab_.push_back(token);
    for (const auto& [token, n] : counts[kBiased]) model.vocab_.push_back(token);
    std::sort(model.vocab_.begin(), model.vocab_.end());
    model.vocab_.erase(std::unique(model.vocab_.begin(), model.vocab_.end()),
                       model.vocab_.end());

    const auto docs_total = static_cast<double>(docs[0] + docs[1]);
    for (int c = 0; c < 2; ++c) {
        model.log_prior_[c] = std::log(static_cast<double>(docs[c]) / docs_total);
        // +1 reserves the OOV pseudo-token in the normalization
        const double denom =
            static_cast<double>(token_total[c]) + smoothing * (static_cast<double>(model.vocab_.size()) + 1.0);
        model.log_lik_[c].reserve(model.vocab_.size());
        for (const auto& token : model.vocab_) {
            const auto it = counts[c].find(token);
            const double num = (it == counts[c].end() ? 0.0 : static_cast<double>(it->second)) + smoothing;
            model.log_lik_[c].push_back(std::log(num / denom));
        }
        model.oov_log_lik_[c] = std::log(smoothing / denom);
    }
    model.rebuild_index();
    return model;
}

void BowModel::rebuild_index() {
    vocab_index_.clear();
    vocab_index_.reserve(vocab_.size());
    for (std::size_t i = 0; i < vocab_.size(); ++i) vocab_index_.emplace(vocab_[i], i);
}

Prediction BowModel::predict_one(const CleanSample& sample) const {
    double score[2] = {log_prior_[kUnbiased], log_prior_[kBiased]};
    for (const auto& token : tokenize(sample.text)) {
        const auto it = vocab_index_.find(token);
        for (int c = 0; c < 2; ++c) {
            score[c] += it == vocab_index_.end() ? oov_log_lik_[c] : log_lik_[c][it->second];
        }
    }
    Prediction out;
    out.index = sample.index;
    out.label = score[kBiased] > score[kUnbiased] ? Label::biased : Label::unbiased;
    out.score = 1.0 / (1.0 + std::exp(score[kUnbiased] - score[kBiased]));
    return out;
}

PredictionSet BowModel::predict(const std::vector<CleanSample>& samples, int threads) const {
    PredictionSet out(samples.size());
    const int t = effective_threads(threads);
    (void)t;
#ifdef _OPENMP
#pragma omp parallel for num_threads(t) schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(samples.size()); ++i) {
        out[static_cast<std::size_t>(i)] = predict_one(samples[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::string BowModel::to_json_string() const {
    nlohmann::json doc;
    doc["format"] = "bipolkit-bow";
    doc["version"] = 1;
    doc["smoothing"] = smoothing_;
    doc["vocabulary"] = vocab_;
    doc["log_prior"] = {{"unbiased", log_prior_[kUnbiased]}, {"biased", log_prior_[kBiased]}};
    doc["log_likelihood"] = {{"unbiased", log_lik_[kUnbiased]}, {"biased", log_lik_[kBiased]}};
    doc["oov_log_likelihood"] = {{"unbiased", oov_log_lik_[kUnbiased]},
                                 {"biased", oov_log_lik_[kBiased]}};
    return doc.dump(2) + "\n";
}

BowModel BowModel::from_json_string(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("model file: ") + e.what());
    }
    try {
        if (doc.at("format") != "bipolkit-bow" || doc.at("version") != 1) {
            throw DataError("model file: unsupported format or version");
        }
        BowModel model;
        model.smoothing_ = doc.at("smoothing").get<double>();
        model.vocab_ = doc.at("vocabulary").get<std::vector<std::string>>();
        model.log_prior_[kUnbiased] = doc.at("log_prior").at("unbiased").get<double>();
        model.log_prior_[kBiased] = doc.at("log_prior").at("biased").get<double>();
        model.log_lik_[kUnbiased] =
            doc.at("log_likelihood").at("unbiased").get<std::vector<double>>();
        model.log_lik_[kBiased] = doc.at("log_likelihood").at("biased").get<std::vector<double>>();
        model.oov_log_lik_[kUnbiased] = doc.at("oov_log_likelihood").at("unbiased").get<double>();
        model.oov_log_lik_[kBiased] = doc.at("oov_log_likelihood").at("biased").get<double>();
        if (model.log_lik_[0].size() != model.vocab_.size() ||
            model.log_lik_[1].size() != model.vocab_.size()) {
            throw DataError("model file: likelihood tables do not match vocabulary size");
        }
        model.rebuild_index();
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("model file: ") + e.what());
    }
}

void BowModel::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write model file: " + path);
    out << to_json_string();
    if (!out) throw DataError("failed writing model file: " + path);
}

BowModel BowModel::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_string(buf.str());
}

PredictionSet load_predictions(const std::string& path, const std::vector<CleanSample>& corpus) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open predictions file: " + path);
    CsvReader reader(in, ',');
    std::vector<std::string> fields;
    if (!reader.next(fields)) throw DataError("predictions file is empty: " + path);

    const auto find_col = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (fields[i] == name) return i;
        }
        return std::nullopt;
    };
    const auto index_col = find_col("index");
    const auto label_col = find_col("label");
    const auto score_col = find_col("score");
    if (!index_col || !label_col) {
        throw DataError("predictions file needs an 'index' and a 'label' column: " + path);
    }

    std::unordered_map<std::uint64_t, Prediction> by_index;
    std::uint64_t row = 1;
    while (reader.next(fields)) {
        ++row;
        const auto where = "predictions row " + std::to_string(row);
        if (fields.size() <= std::max(*index_col, *label_col)) {
            throw DataError(where + ": too few fields");
        }
        Prediction p;
        try {
            std::size_t used = 0;
            p.index = std::stoull(fields[*index_col], &used);
            if (used != fields[*index_col].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw DataError(where + ": bad index '" + fields[*index_col] + "'");
        }
        const auto label = label_from_string(fields[*label_col]);
        if (!label) throw DataError(where + ": unknown label '" + fields[*label_col] + "'");
        p.label = *label;
        if (score_col && *score_col < fields.size() && !fields[*score_col].empty()) {
            try {
                std::size_t used = 0;
                const double s = std::stod(fields[*score_col], &used);
                if (used != fields[*score_col].size()) throw std::invalid_argument("trailing");
                p.score = s;
            } catch (const std::exception&) {
                throw DataError(where + ": bad score '" + fields[*score_col] + "'");
            }
            if (*p.score < 0.0 || *p.score > 1.0) {
                throw DataError(where + ": score outside [0,1]");
            }
        }
        if (!by_index.emplace(p.index, p).second) {
            throw DataError(where + ": duplicate index " + std::to_string(p.index));
        }
    }

    PredictionSet out;
    out.reserve(corpus.size());
    for (const auto& sample : corpus) {
        const auto it = by_index.find(sample.index);
        if (it == by_index.end()) {
            throw DataError("predictions file missing index " + std::to_string(sample.index));
        }
        out.push_back(it->second);
    }
    return out;
}

ConfusionCounts confusion(const PredictionSet& pred, const std::vector<CleanSample>& gold) {
    std::unordered_map<std::uint64_t, Label> labels;
    labels.reserve(gold.size());
    for (const auto& sample : gold) {
        if (sample.label) labels.emplace(sample.index, *sample.label);
    }
    ConfusionCounts cm;
    for (const auto& p : pred) {
        const auto it = labels.find(p.index);
        if (it == labels.end()) {
            throw DataError("no gold label for index " + std::to_string(p.index));
        }
        if (p.label == Label::biased) {
            it->second == Label::biased ? ++cm.tp : ++cm.fp;
        } else {
            it->second == Label::unbiased ? ++cm.tn : ++cm.fn;
        }
    }
    return cm;
}

double macro_f1(const ConfusionCounts& cm) {
    if (cm.total() == 0) throw DataError("empty confusion matrix");
    const auto f1 = [](std::uint64_t tp, std::uint64_t fp, std::uint64_t fn) {
        const double p = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
        const double r = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
        return p + r > 0 ? 2.0 * p * r / (p + r) : 0.0;
    };
    return (f1(cm.tp, cm.fp, cm.fn) + f1(cm.tn, cm.fn, cm.fp)) / 2.0;
}

std::optional<double> positive_error_rate(const ConfusionCounts& cm) {
    if (cm.fp + cm.tp == 0) return std::nullopt;
    return static_cast<double>(cm.fp) / static_cast<double>(cm.fp + cm.tp);
}

}  // namespace bipolkit
