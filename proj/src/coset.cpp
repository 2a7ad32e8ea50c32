#include "mcg/coset.hpp"

#include "mcg/error.hpp"

#include <deque>
#include <map>

namespace mcg {

namespace {

class Enumerator {
  public:
    Enumerator(const Presentation& p, long cap) : cap_(cap) {
        size_t idx = 0;
        for (const auto& g : p.generators) gen_index_[g] = idx++;
        ncols_ = 2 * p.generators.size();
        table_.push_back({}); // dummy row, cosets are 1-based
        rep_.push_back(0);
        new_coset();
    }

    // column of generator g with exponent e
    size_t col(const Letter& l) const {
        auto it = gen_index_.find(l.gen);
        if (it == gen_index_.end())
            throw error(errc::malformed_data, "word uses unknown generator '" + l.gen + "'");
        return 2 * it->second + (l.exp == 1 ? 0 : 1);
    }
    static size_t invcol(size_t c) { return c ^ 1; }

    long find(long a) {
        while (rep_[a] != a) {
            rep_[a] = rep_[rep_[a]];
            a = rep_[a];
        }
        return a;
    }
    bool live(long a) { return find(a) == a; }

    bool scan_and_fill(long alpha, const std::vector<size_t>& w) {
        if (w.empty()) return true;
        long f = alpha;
        size_t i = 0;
        long b = alpha;
        size_t j = w.size();
        for (;;) {
            while (i < j && table_[f][w[i]] != 0) f = table_[f][w[i++]];
            if (i == j) {
                if (f != b) coincidence(f, b);
                return true;
            }
            while (j > i && table_[b][invcol(w[j - 1])] != 0)
                b = table_[b][invcol(w[--j])];
            if (j == i) {
                if (f != b) coincidence(f, b);
                return true;
            }
            if (j == i + 1) {
                table_[f][w[i]] = b;
                table_[b][invcol(w[i])] = f;
                return true;
            }
            long n = new_coset();
            if (n == 0) return false;
            table_[f][w[i]] = n;
            table_[n][invcol(w[i])] = f;
            f = n;
            ++i;
        }
    }

    CosetResult run(const Presentation& p, const std::vector<Word>& subgroup) {
        std::vector<std::vector<size_t>> rels;
        for (const auto& r : p.relators) {
            Word rr = free_reduce(r);
            std::vector<size_t> cols;
            for (const auto& l : rr) cols.push_back(col(l));
            if (!cols.empty()) rels.push_back(std::move(cols));
        }
        for (const auto& w : subgroup) {
            std::vector<size_t> cols;
            for (const auto& l : free_reduce(w)) cols.push_back(col(l));
            if (!cols.empty() && !scan_and_fill(1, cols)) return out_of_bounds();
        }
        for (long alpha = 1; alpha < static_cast<long>(table_.size()); ++alpha) {
            if (!live(alpha)) continue;
            bool died = false;
            for (const auto& r : rels) {
                if (!scan_and_fill(alpha, r)) return out_of_bounds();
                if (!live(alpha)) {
                    died = true;
                    break;
                }
            }
            if (died) continue;
            for (size_t c = 0; c < ncols_; ++c) {
                if (!live(alpha)) break;
                if (table_[alpha][c] != 0) continue;
                long n = new_coset();
                if (n == 0) return out_of_bounds();
                table_[alpha][c] = n;
                table_[n][invcol(c)] = alpha;
            }
        }
        CosetResult res;
        res.completed = true;
        res.defined = defined_;
        res.index = 0;
        for (long a = 1; a < static_cast<long>(table_.size()); ++a)
            if (live(a)) ++res.index;
        return res;
    }

  private:
    CosetResult out_of_bounds() const { return {false, 0, defined_}; }

    long new_coset() {
        if (defined_ >= cap_) return 0;
        ++defined_;
        table_.push_back(std::vector<long>(ncols_, 0));
        rep_.push_back(static_cast<long>(table_.size()) - 1);
        return static_cast<long>(table_.size()) - 1;
    }

    void merge(long a, long b, std::deque<long>& q) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        rep_[b] = a;
        q.push_back(b);
    }

    void coincidence(long a, long b) {
        std::deque<long> q;
        merge(a, b, q);
        while (!q.empty()) {
            long gamma = q.front();
            q.pop_front();
            for (size_t x = 0; x < ncols_; ++x) {
                long delta = table_[gamma][x];
                if (delta == 0) continue;
                table_[delta][invcol(x)] = 0;
                long mu = find(gamma), nu = find(delta);
                if (table_[mu][x] != 0)
                    merge(nu, table_[mu][x], q);
                else if (table_[nu][invcol(x)] != 0)
                    merge(mu, table_[nu][invcol(x)], q);
                else {
                    table_[mu][x] = nu;
                    table_[nu][invcol(x)] = mu;
                }
            }
        }
    }

    std::map<std::string, size_t> gen_index_;
    size_t ncols_ = 0;
    std::vector<std::vector<long>> table_;
    std::vector<long> rep_;
    long defined_ = 0;
    long cap_ = 0;
};

} // namespace

CosetResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                         long max_cosets) {
    p.validate();
    if (max_cosets < 1) throw error(errc::malformed_data, "max_cosets must be positive");
    Enumerator e(p, max_cosets);
    return e.run(p, subgroup_gens);
}

} // namespace mcg
