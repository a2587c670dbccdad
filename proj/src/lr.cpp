#include "deligne/lr.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace deligne {

namespace {

// Backtracking over the cells of lambda/mu in reverse reading order (rows top
// to bottom, each row right to left).
class LrCounter {
public:
    LrCounter(const Partition& lambda, const Partition& mu, const Partition& kappa)
        : lambda_(lambda), mu_(mu), kappa_(kappa), filling_(static_cast<std::size_t>(lambda.length())),
          used_(static_cast<std::size_t>(kappa.length()) + 1, 0) {
        for (int r = 1; r <= lambda.length(); ++r) {
            filling_[r - 1].assign(static_cast<std::size_t>(lambda.row(r)) + 1, 0);
            for (int c = lambda.row(r); c > mu.row(r); --c) cells_.push_back({r, c});
        }
    }

    std::int64_t count() {
        total_ = 0;
        place(0);
        return total_;
    }

private:
    struct Cell {
        int row, col;
    };

    void place(std::size_t k) {
        if (k == cells_.size()) {
            ++total_;
            return;
        }
        const auto [r, c] = cells_[k];
        int hi = kappa_.length();
        if (c < lambda_.row(r)) hi = std::min(hi, filling_[r - 1][c + 1]);
        int lo = 1;
        if (r > 1 && c > mu_.row(r - 1)) lo = filling_[r - 2][c] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (used_[v] >= kappa_.row(v)) continue;
            if (v > 1 && used_[v] + 1 > used_[v - 1]) continue;
            ++used_[v];
            filling_[r - 1][c] = v;
            place(k + 1);
            --used_[v];
        }
        filling_[r - 1][c] = 0;
    }

    const Partition& lambda_;
    const Partition& mu_;
    const Partition& kappa_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> filling_;
    std::vector<int> used_;
    std::int64_t total_ = 0;
};

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, std::int64_t>;

// Semistandard tableaux of shape lambda with entries in 1..nvars, filled row
// by row, left to right. `cap` optionally bounds how many times each value
// may occur. `emit` receives the content vector of each finished tableau.
void for_each_ssyt(const Partition& lambda, int nvars, const std::vector<int>* cap,
                   const std::function<void(const Monomial&)>& emit) {
    const Partition cols = lambda.transpose();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(lambda.length()));
    for (int r = 1; r <= lambda.length(); ++r) t[r - 1].assign(static_cast<std::size_t>(lambda.row(r)), 0);
    Monomial content(static_cast<std::size_t>(nvars), 0);

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r > lambda.length()) {
            emit(content);
            return;
        }
        if (c > lambda.row(r)) {
            fill(r + 1, 1);
            return;
        }
        int lo = r;  // column strictness forces entry >= row index
        if (c > 1) lo = std::max(lo, t[r - 1][c - 2]);
        if (r > 1) lo = std::max(lo, t[r - 2][c - 1] + 1);
        const int hi = nvars - (cols.row(c) - r);
        for (int v = lo; v <= hi; ++v) {
            if (cap && content[v - 1] >= (*cap)[v - 1]) continue;
            ++content[v - 1];
            t[r - 1][c - 1] = v;
            fill(r, c + 1);
            --content[v - 1];
        }
    };
    fill(1, 1);
}

const Polynomial& schur_polynomial(const Partition& lambda, int nvars) {
    static std::mutex mutex;
    static std::map<std::pair<Partition, int>, Polynomial> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(lambda, nvars);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Polynomial p;
    for_each_ssyt(lambda, nvars, nullptr, [&](const Monomial& m) { ++p[m]; });
    return cache.emplace(std::move(key), std::move(p)).first->second;
}

std::int64_t kostka(const Partition& lambda, const Monomial& content) {
    std::int64_t n = 0;
    for_each_ssyt(lambda, static_cast<int>(content.size()), &content, [&](const Monomial& m) {
        if (m == content) ++n;
    });
    return n;
}

bool weakly_decreasing(const Monomial& m) {
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i] > m[i - 1]) return false;
    return true;
}

}  // namespace

std::int64_t lr_coeff(const Partition& lambda, const Partition& mu, const Partition& kappa) {
    if (lambda.size() != mu.size() + kappa.size()) return 0;
    if (!lambda.contains(mu) || !lambda.contains(kappa)) return 0;
    return LrCounter(lambda, mu, kappa).count();
}

std::map<Partition, std::int64_t> schur_product_oracle(const Partition& mu, const Partition& kappa, int nvars) {
    if (nvars < mu.size() + kappa.size())
        throw std::invalid_argument("schur_product_oracle: need at least |mu| + |kappa| variables");

    // Copy the factors out of the cache; the cache lock is not held while
    // multiplying.
    const Polynomial a = schur_polynomial(mu, nvars);
    const Polynomial b = schur_polynomial(kappa, nvars);

    // The product is symmetric, so its leading monomial is always a
    // partition; tracking only the weakly decreasing exponents is enough for
    // leading-term subtraction.
    Polynomial product;
    Monomial sum(static_cast<std::size_t>(nvars));
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            for (int i = 0; i < nvars; ++i) sum[i] = ma[i] + mb[i];
            if (weakly_decreasing(sum)) product[sum] += ca * cb;
        }
    std::erase_if(product, [](const auto& kv) { return kv.second == 0; });

    std::map<Partition, std::int64_t> out;
    while (!product.empty()) {
        const auto& [lead, coeff] = *product.rbegin();
        if (coeff < 0) throw std::logic_error("schur_product_oracle: negative leading coefficient");
        const Partition lambda(lead);
        const std::int64_t c = coeff;
        out[lambda] += c;
        std::vector<Monomial> keys;
        keys.reserve(product.size());
        for (const auto& [m, _] : product) keys.push_back(m);
        for (const auto& m : keys) {
            const std::int64_t k = kostka(lambda, m);
            if (k == 0) continue;
            auto it = product.find(m);
            it->second -= c * k;
            if (it->second == 0) product.erase(it);
        }
    }
    return out;
}

std::int64_t B_entry(const Bipartition& lambda, const Bipartition& mu) {
    const int db = lambda.black.size() - mu.black.size();
    const int dw = lambda.white.size() - mu.white.size();
    if (db != dw || db < 0) return 0;
    std::int64_t total = 0;
    for (const auto& kappa : partitions_of(db)) {
        const std::int64_t x = lr_coeff(lambda.black, mu.black, kappa);
        if (x == 0) continue;
        total += x * lr_coeff(lambda.white, mu.white, kappa);
    }
    return total;
}

BipartitionMatrix B_matrix(int max_size) { return BipartitionMatrix::tabulate(max_size, B_entry); }

}  // namespace deligne
