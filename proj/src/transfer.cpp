#include "moritalab/transfer.hpp"

#include <cmath>
#include <stdexcept>

#include "moritalab/logsum.hpp"

namespace moritalab {

TransferOp build_transfer(const LocalFn& f, const DisorderSpec& spec) {
    spec.validate();
    if (f.alphabet != spec.alphabet())
        throw std::invalid_argument("build_transfer: LocalFn alphabet mismatch");
    const int m = spec.alphabet();
    TransferOp t;
    t.k = f.k;
    t.alphabet = m;
    if (f.k == 1) {
        t.dim = 1;
        t.op = Mat(1);
        t.site_weights.resize(std::size_t(m));
        double s = 0.0;
        for (int g = 0; g < m; ++g) {
            t.site_weights[std::size_t(g)] = spec.probs[std::size_t(g)] * std::exp(f.table[std::size_t(g)]);
            s += t.site_weights[std::size_t(g)];
        }
        t.op(0, 0) = s;
        t.spec = spec;
        return t;
    }
    WordSpace grams{m, f.k - 1};
    std::size_t dim = grams.size();
    if (dim > 10000) throw std::invalid_argument("build_transfer: state space |Gamma|^(k-1) > 1e4");
    t.dim = dim;
    t.op = Mat(dim);
    // Word index of (gram, appended symbol) is gram*m + sym: the shift
    // state and the F lookup share the same lexicographic encoding.
    for (std::size_t s = 0; s < dim; ++s) {
        for (int sym = 0; sym < m; ++sym) {
            std::size_t next = grams.shift_append(s, sym);
            t.op(s, next) = spec.probs[std::size_t(sym)] * std::exp(f.table[s * std::size_t(m) + std::size_t(sym)]);
        }
    }
    t.spec = spec;
    return t;
}

PerronData perron(const TransferOp& t, double tol) {
    SpectralResult r = perron_eigen(t.op, tol);
    PerronData p;
    p.rho = r.rho;
    p.right = std::move(r.right);
    p.left = std::move(r.left);
    p.residual = r.residual;
    p.iterations = r.iterations;
    for (double x : p.right)
        if (!(x > 0.0)) throw std::runtime_error("perron: right eigenvector not strictly positive");
    for (double x : p.left)
        if (!(x > 0.0)) throw std::runtime_error("perron: left eigenvector not strictly positive");
    return p;
}

double l_of_f(const LocalFn& f, const DisorderSpec& spec) {
    TransferOp t = build_transfer(f, spec);
    if (t.dim == 1) return std::log(t.op(0, 0));
    return std::log(perron(t).rho);
}

double sup_abs_AN(const LocalFn& f, const DisorderSpec& spec, std::size_t n) {
    const int m = spec.alphabet();
    if (f.alphabet != m) throw std::invalid_argument("sup_abs_AN: alphabet mismatch");
    const std::size_t steps = n + 1; // windows j = 0..n
    auto max_plus = [&](double sign) {
        if (f.k == 1) {
            double best = neg_inf;
            for (int g = 0; g < m; ++g) best = std::max(best, sign * f.table[std::size_t(g)]);
            return best * double(steps);
        }
        WordSpace grams{m, f.k - 1};
        std::size_t dim = grams.size();
        if (dim * steps > (std::size_t(1) << 32))
            throw std::invalid_argument("sup_abs_AN: n * |Gamma|^(k-1) over budget");
        std::vector<double> v(dim, 0.0), w(dim);
        for (std::size_t step = 0; step < steps; ++step) {
            std::fill(w.begin(), w.end(), neg_inf);
            for (std::size_t s = 0; s < dim; ++s) {
                for (int sym = 0; sym < m; ++sym) {
                    std::size_t next = grams.shift_append(s, sym);
                    double cand = v[s] + sign * f.table[s * std::size_t(m) + std::size_t(sym)];
                    if (cand > w[next]) w[next] = cand;
                }
            }
            v.swap(w);
        }
        double best = neg_inf;
        for (double x : v) best = std::max(best, x);
        return best;
    };
    // max |A| = max(max A, -min A); the second run maximizes -A.
    return std::max(max_plus(+1.0), max_plus(-1.0));
}

double GibbsChain::log_cylinder(const std::vector<int>& word) const {
    if (k == 1) {
        double s = 0.0;
        for (int sym : word) s += std::log(site_law[std::size_t(sym)]);
        return s;
    }
    WordSpace grams{alphabet, k - 1};
    if (word.size() < std::size_t(k - 1))
        throw std::invalid_argument("log_cylinder: word shorter than the chain state");
    std::vector<int> head(word.begin(), word.begin() + (k - 1));
    std::size_t state = grams.encode(head);
    double s = std::log(stationary[state]);
    for (std::size_t i = std::size_t(k - 1); i < word.size(); ++i) {
        std::size_t next = grams.shift_append(state, word[i]);
        s += std::log(transition(state, next));
        state = next;
    }
    return s;
}

GibbsChain gibbs_chain(const TransferOp& t, const PerronData& p) {
    GibbsChain c;
    c.k = t.k;
    c.alphabet = t.alphabet;
    if (t.k == 1) {
        c.transition = Mat(1, 1.0);
        c.stationary = {1.0};
        c.site_law.resize(std::size_t(t.alphabet));
        double rho = t.op(0, 0);
        for (int g = 0; g < t.alphabet; ++g) c.site_law[std::size_t(g)] = t.site_weights[std::size_t(g)] / rho;
        return c;
    }
    c.transition = Mat(t.dim);
    c.stationary.assign(t.dim, 0.0);
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = 0; j < t.dim; ++j)
            if (t.op(i, j) != 0.0) c.transition(i, j) = t.op(i, j) * p.right[j] / (p.rho * p.right[i]);
    for (std::size_t i = 0; i < t.dim; ++i) c.stationary[i] = p.left[i] * p.right[i];
    return c;
}

EntropyDensity entropy_density(const LocalFn& f, const DisorderSpec& spec) {
    TransferOp t = build_transfer(f, spec);
    EntropyDensity out;
    if (t.dim == 1) {
        out.l_of_f = std::log(t.op(0, 0));
        out.chain = gibbs_chain(t, PerronData{t.op(0, 0), {1.0}, {1.0}, 0.0, 1});
    } else {
        PerronData p = perron(t);
        out.l_of_f = std::log(p.rho);
        out.chain = gibbs_chain(t, p);
    }
    out.mean_f = f.mean_under(spec);
    out.value = out.l_of_f - out.mean_f;
    return out;
}

NegligibilityCertificate is_negligible(const LocalFn& f, const DisorderSpec& spec, double tol) {
    NegligibilityCertificate cert;
    cert.tol = tol;
    cert.l_of_f = l_of_f(f, spec);
    cert.negligible = cert.l_of_f <= tol;
    for (std::size_t i = 0; i < cert.lengths.size(); ++i)
        cert.sup_abs[i] = sup_abs_AN(f, spec, cert.lengths[i]);
    return cert;
}

double log_moment_an(const LocalFn& f, const DisorderSpec& spec, std::size_t n) {
    TransferOp t = build_transfer(f, spec);
    const std::size_t steps = n + 1;
    std::vector<double> v(t.dim);
    if (t.k == 1) {
        v = {1.0};
    } else {
        WordSpace grams{t.alphabet, t.k - 1};
        std::vector<int> symbols;
        for (std::size_t s = 0; s < t.dim; ++s) {
            grams.decode(s, symbols);
            v[s] = spec.word_prob(symbols);
        }
    }
    double log_scale = 0.0;
    for (std::size_t step = 0; step < steps; ++step) {
        v = vec_mat(v, t.op);
        double peak = max_abs(v);
        if (peak <= 0.0) throw std::runtime_error("log_moment_an: vanished vector");
        if (peak > 1e200 || peak < 1e-200) {
            for (double& x : v) x /= peak;
            log_scale += std::log(peak);
        }
    }
    double sum = 0.0;
    for (double x : v) sum += x;
    return log_scale + std::log(sum);
}

} // namespace moritalab
