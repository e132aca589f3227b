#include "moritalab/disorder.hpp"

#include <algorithm>
#include <stdexcept>

namespace moritalab {

void DisorderSpec::validate() const {
    if (charges.empty()) throw std::invalid_argument("DisorderSpec: empty alphabet");
    if (charges.size() != probs.size())
        throw std::invalid_argument("DisorderSpec: charges/probs length mismatch");
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw std::invalid_argument("DisorderSpec: negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("DisorderSpec: probabilities sum to " + std::to_string(total));
    for (std::size_t i = 0; i < charges.size(); ++i) {
        if (!std::isfinite(charges[i])) throw std::invalid_argument("DisorderSpec: non-finite charge");
        for (std::size_t j = i + 1; j < charges.size(); ++j)
            if (charges[i] == charges[j]) throw std::invalid_argument("DisorderSpec: duplicate charge");
    }
}

double DisorderSpec::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < charges.size(); ++i) m += probs[i] * charges[i];
    return m;
}

double DisorderSpec::variance() const {
    double m = mean(), v = 0.0;
    for (std::size_t i = 0; i < charges.size(); ++i) v += probs[i] * (charges[i] - m) * (charges[i] - m);
    return v;
}

double DisorderSpec::mgf(double t) const {
    double s = 0.0;
    for (std::size_t i = 0; i < charges.size(); ++i) s += probs[i] * std::exp(t * charges[i]);
    return s;
}

double DisorderSpec::word_prob(const std::vector<int>& symbols) const {
    double p = 1.0;
    for (int s : symbols) p *= probs[std::size_t(s)];
    return p;
}

int DisorderSpec::sample_index(double u) const {
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
        cum += probs[i];
        if (u < cum) return int(i);
    }
    return int(probs.size()) - 1;
}

DisorderSpec DisorderSpec::fair_pm1() { return DisorderSpec{{+1.0, -1.0}, {0.5, 0.5}}; }

DisorderSpec DisorderSpec::two_point(double a, double b, double prob_a) {
    return DisorderSpec{{a, b}, {prob_a, 1.0 - prob_a}};
}

std::vector<int> sample_disorder_indices(const DisorderSpec& spec, std::size_t n, RngStream stream) {
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = spec.sample_index(stream.uniform_at(i));
    return out;
}

std::vector<double> sample_disorder(const DisorderSpec& spec, std::size_t n, RngStream stream) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = spec.charges[std::size_t(spec.sample_index(stream.uniform_at(i)))];
    return out;
}

LocalFn LocalFn::centered(int k, std::vector<double> raw, const DisorderSpec& spec) {
    spec.validate();
    if (k < 1) throw std::invalid_argument("LocalFn: range k must be >= 1");
    WordSpace ws{spec.alphabet(), k};
    if (raw.size() != ws.size()) throw std::invalid_argument("LocalFn: table size != alphabet^k");
    for (double v : raw)
        if (!std::isfinite(v)) throw std::invalid_argument("LocalFn: non-finite entry");
    LocalFn f{k, spec.alphabet(), std::move(raw)};
    double m = f.mean_under(spec);
    for (double& v : f.table) v -= m;
    return f;
}

LocalFn LocalFn::zero(int k, const DisorderSpec& spec) {
    WordSpace ws{spec.alphabet(), k};
    return LocalFn{k, spec.alphabet(), std::vector<double>(ws.size(), 0.0)};
}

LocalFn LocalFn::gradient(const std::vector<double>& g, const DisorderSpec& spec) {
    if (g.size() != spec.charges.size()) throw std::invalid_argument("LocalFn: gradient needs one g per symbol");
    WordSpace ws{spec.alphabet(), 2};
    std::vector<double> table(ws.size());
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            table[a * g.size() + b] = g[b] - g[a];
    // E[g(w2) - g(w1)] = 0 under any product law; centered by structure.
    return LocalFn{2, spec.alphabet(), std::move(table)};
}

double LocalFn::mean_under(const DisorderSpec& spec) const {
    WordSpace ws = words();
    std::vector<int> symbols;
    double m = 0.0;
    for (std::size_t w = 0; w < ws.size(); ++w) {
        ws.decode(w, symbols);
        m += spec.word_prob(symbols) * table[w];
    }
    return m;
}

double LocalFn::max_abs() const {
    double m = 0.0;
    for (double v : table) m = std::max(m, std::abs(v));
    return m;
}

} // namespace moritalab
