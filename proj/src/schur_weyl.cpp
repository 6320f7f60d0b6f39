#include "apa/schur_weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace apa {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Perm perm_transposition(int a, int b, int n) {
    Perm p = perm_identity(n);
    std::swap(p[a - 1], p[b - 1]);
    return p;
}

Perm perm_mul(const Perm& u, const Perm& v) {
    Perm w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = u[v[i] - 1];
    return w;
}

Perm perm_inverse(const Perm& u) {
    Perm w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[u[i] - 1] = static_cast<int>(i) + 1;
    return w;
}

std::vector<Perm> symmetric_group(int n) {
    Perm p = perm_identity(n);
    std::vector<Perm> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

namespace {

// adjacent-transposition word multiplying (left to right) to p
std::vector<int> reduced_word_of(const Perm& p) {
    Perm w = p;
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                word.push_back(static_cast<int>(i) + 1);
                changed = true;
            }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace

GroupAlgebraElement GroupAlgebraElement::one(int n) { return of(perm_identity(n)); }

GroupAlgebraElement GroupAlgebraElement::of(const Perm& p) {
    GroupAlgebraElement e(static_cast<int>(p.size()));
    e.add_term(p, Rat(1));
    return e;
}

void GroupAlgebraElement::add_term(const Perm& p, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, c);
    return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r(a.n_);
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_) r.add_term(perm_mul(pa, pb), ca * cb);
    return r;
}

GroupAlgebraElement operator*(const Rat& c, const GroupAlgebraElement& a) {
    GroupAlgebraElement r(a.n());
    for (const auto& [p, v] : a.terms()) r.add_term(p, c * v);
    return r;
}

GroupAlgebraElement t_sum(int n, int b) {
    if (b < 1 || b > n) throw std::out_of_range("t_sum index");
    GroupAlgebraElement r(n);
    for (int a = 1; a <= n; ++a)
        if (a != b) r.add_term(perm_transposition(a, b, n), Rat(1));
    return r;
}

GroupAlgebraElement z_central(int n, int l) {
    if (l < 0) throw std::invalid_argument("z_central power");
    GroupAlgebraElement r(n);
    for (int b = 1; b <= n; ++b) {
        GroupAlgebraElement p = GroupAlgebraElement::one(n);
        for (int j = 0; j < l; ++j) p = p * t_sum(n, b);
        r += p;
    }
    return r;
}

bool is_central(const GroupAlgebraElement& a) {
    for (int i = 1; i < a.n(); ++i) {
        auto s = GroupAlgebraElement::of(perm_transposition(i, i + 1, a.n()));
        if (!(s * a == a * s)) return false;
    }
    return true;
}

SnModule::SnModule(int n, int dim, std::string name,
                   std::vector<std::vector<std::vector<Rat>>> adjacent)
    : n_(n), dim_(dim), name_(std::move(name)), adjacent_(std::move(adjacent)) {}

SnModule SnModule::trivial(int n) {
    std::vector<std::vector<std::vector<Rat>>> adj(
        std::max(0, n - 1), std::vector<std::vector<Rat>>(1, std::vector<Rat>(1, Rat(1))));
    return SnModule(n, 1, "trivial", std::move(adj));
}

SnModule SnModule::permutation(int n) {
    std::vector<std::vector<std::vector<Rat>>> adj;
    for (int i = 1; i < n; ++i) {
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
        for (int j = 1; j <= n; ++j) {
            int img = (j == i) ? i + 1 : (j == i + 1 ? i : j);
            m[img - 1][j - 1] = 1;
        }
        adj.push_back(std::move(m));
    }
    return SnModule(n, n, "permutation", std::move(adj));
}

SnModule SnModule::regular(int n) {
    auto group = symmetric_group(n);
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = static_cast<int>(i);
    const int dim = static_cast<int>(group.size());
    std::vector<std::vector<std::vector<Rat>>> adj;
    for (int i = 1; i < n; ++i) {
        Perm s = perm_transposition(i, i + 1, n);
        std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim, Rat(0)));
        for (int j = 0; j < dim; ++j) m[index[perm_mul(s, group[j])]][j] = 1;
        adj.push_back(std::move(m));
    }
    return SnModule(n, dim, "regular", std::move(adj));
}

std::vector<std::vector<Rat>> SnModule::matrix(const Perm& p) const {
    std::vector<std::vector<Rat>> m(dim_, std::vector<Rat>(dim_, Rat(0)));
    for (int i = 0; i < dim_; ++i) m[i][i] = 1;
    for (int letter : reduced_word_of(p)) {
        // m <- adjacent * m
        const auto& s = adjacent_[letter - 1];
        std::vector<std::vector<Rat>> r(dim_, std::vector<Rat>(dim_, Rat(0)));
        for (int i = 0; i < dim_; ++i)
            for (int l = 0; l < dim_; ++l) {
                if (s[i][l] == 0) continue;
                for (int j = 0; j < dim_; ++j)
                    if (m[l][j] != 0) r[i][j] += s[i][l] * m[l][j];
            }
        m = std::move(r);
    }
    return m;
}

std::vector<std::vector<Rat>> SnModule::matrix(const GroupAlgebraElement& a) const {
    std::vector<std::vector<Rat>> m(dim_, std::vector<Rat>(dim_, Rat(0)));
    for (const auto& [p, c] : a.terms()) {
        auto mp = matrix(p);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                if (mp[i][j] != 0) m[i][j] += c * mp[i][j];
    }
    return m;
}

TensorOperator::TensorOperator(int n, int k, std::shared_ptr<const SnModule> module,
                               std::function<TensorVec(const TensorIndex&)> apply)
    : n_(n), k_(k), module_(std::move(module)), apply_(std::move(apply)) {}

TensorOperator TensorOperator::identity(int n, int k, std::shared_ptr<const SnModule> module) {
    return TensorOperator(n, k, std::move(module), [](const TensorIndex& idx) {
        return TensorVec{{idx, Rat(1)}};
    });
}

TensorVec TensorOperator::operator()(const TensorVec& v) const {
    TensorVec out;
    for (const auto& [idx, c] : v) {
        for (auto& [jdx, d] : apply_(idx)) {
            auto it = out.find(jdx);
            if (it == out.end())
                out.emplace(jdx, c * d);
            else {
                it->second += c * d;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

TensorOperator TensorOperator::after(const TensorOperator& a) const {
    TensorOperator self = *this;
    return TensorOperator(n_, k_, module_, [self, a](const TensorIndex& idx) {
        return self(a(idx));
    });
}

TensorOperator operator*(const TensorOperator& f, const TensorOperator& g) { return f.after(g); }

TensorOperator operator+(const TensorOperator& f, const TensorOperator& g) {
    return TensorOperator(f.n(), f.k(), f.module(), [f, g](const TensorIndex& idx) {
        TensorVec out = f(idx);
        for (const auto& [jdx, c] : g(idx)) {
            auto it = out.find(jdx);
            if (it == out.end())
                out.emplace(jdx, c);
            else {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
        return out;
    });
}

TensorOperator operator*(const Rat& c, const TensorOperator& f) {
    return TensorOperator(f.n(), f.k(), f.module(), [c, f](const TensorIndex& idx) {
        TensorVec out;
        if (c == 0) return out;
        for (const auto& [jdx, d] : f(idx)) out.emplace(jdx, c * d);
        return out;
    });
}

std::vector<TensorIndex> tensor_basis(int n, int k, const SnModule& module) {
    std::vector<TensorIndex> all;
    std::vector<int> a(k, 1);
    while (true) {
        for (int a0 = 1; a0 <= module.dim(); ++a0) all.push_back({a0, a});
        int pos = k - 1;
        while (pos >= 0 && a[pos] == n) {
            a[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++a[pos];
    }
    return all;
}

bool operator==(const TensorOperator& f, const TensorOperator& g) {
    if (f.n() != g.n() || f.k() != g.k()) return false;
    if (f.module()->dim() != g.module()->dim()) return false;
    for (const auto& idx : tensor_basis(f.n(), f.k(), *f.module()))
        if (f(idx) != g(idx)) return false;
    return true;
}

namespace {

// sparse module action of a group element on one module basis vector
std::map<int, Rat> module_apply(const SnModule& m, const Perm& p, int basis) {
    std::map<int, Rat> v{{basis, Rat(1)}};
    auto word = reduced_word_of(p);
    // p = s_{w0} s_{w1} ... as a product, so the last letter acts first
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto& mat = m.adjacent(*it);
        std::map<int, Rat> next;
        for (const auto& [j, c] : v)
            for (int i = 0; i < m.dim(); ++i)
                if (mat[i][j - 1] != 0) next[i + 1] += c * mat[i][j - 1];
        for (auto jt = next.begin(); jt != next.end();)
            jt = (jt->second == 0) ? next.erase(jt) : std::next(jt);
        v = std::move(next);
    }
    return v;
}

// transposition of values (p,q) applied to the module slot and the first
// `upto` tensor positions
TensorVec act_prefix(const SnModule& m, int p, int q, int upto, const TensorIndex& idx) {
    Perm t = perm_transposition(p, q, m.n());
    TensorIndex out = idx;
    for (int i = 0; i < upto; ++i) {
        if (out.a[i] == p)
            out.a[i] = q;
        else if (out.a[i] == q)
            out.a[i] = p;
    }
    TensorVec res;
    for (const auto& [mi, c] : module_apply(m, t, idx.a0)) {
        TensorIndex o = out;
        o.a0 = mi;
        res.emplace(o, c);
    }
    return res;
}

struct GenName {
    char kind;  // 'e','t','x','z','s'
    int index;
};

GenName parse_gen(const std::string& s) {
    std::size_t pos = 0;
    while (pos < s.size() && !isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == 0 || pos == s.size()) throw std::invalid_argument("bad generator: " + s);
    std::string head = s.substr(0, pos);
    int index = std::stoi(s.substr(pos));
    if (head == "e") return {'e', index};
    if (head == "tau" || head == "t") return {'t', index};
    if (head == "x" || head == "X") return {'x', index};
    if (head == "z") return {'z', index};
    if (head == "s") return {'s', index};
    throw std::invalid_argument("bad generator: " + s);
}

}  // namespace

TensorOperator psi_generator(const std::string& gen, int n, int k,
                             std::shared_ptr<const SnModule> module) {
    GenName g = parse_gen(gen);
    const SnModule* m = module.get();
    switch (g.kind) {
        case 'e': {
            if (g.index < 1 || g.index > 2 * k - 1) throw std::out_of_range("e index");
            if (g.index % 2 == 1) {
                int i = (g.index + 1) / 2;
                return TensorOperator(n, k, module, [n, i](const TensorIndex& idx) {
                    TensorVec out;
                    for (int b = 1; b <= n; ++b) {
                        TensorIndex o = idx;
                        o.a[i - 1] = b;
                        out.emplace(o, Rat(1));
                    }
                    return out;
                });
            }
            int i = g.index / 2;
            return TensorOperator(n, k, module, [i](const TensorIndex& idx) {
                TensorVec out;
                if (idx.a[i - 1] == idx.a[i]) out.emplace(idx, Rat(1));
                return out;
            });
        }
        case 't': {
            if (g.index < 2 || g.index > 2 * k - 1) throw std::out_of_range("tau index");
            if (g.index % 2 == 0) {
                int i = g.index / 2;
                return TensorOperator(n, k, module, [m, i](const TensorIndex& idx) {
                    if (idx.a[i - 1] == idx.a[i]) return TensorVec{};
                    return act_prefix(*m, idx.a[i - 1], idx.a[i], i - 1, idx);
                });
            }
            int i = (g.index - 1) / 2;
            return TensorOperator(n, k, module, [m, i](const TensorIndex& idx) {
                if (idx.a[i - 1] == idx.a[i]) return TensorVec{};
                return act_prefix(*m, idx.a[i - 1], idx.a[i], i + 1, idx);
            });
        }
        case 'x': {
            if (g.index < 1 || g.index > 2 * k) throw std::out_of_range("x index");
            int i = (g.index + 1) / 2;
            int upto = (g.index % 2 == 1) ? i - 1 : i;
            return TensorOperator(n, k, module, [m, n, i, upto](const TensorIndex& idx) {
                TensorVec out;
                for (int b = 1; b <= n; ++b) {
                    if (b == idx.a[i - 1]) continue;
                    for (auto& [jdx, c] : act_prefix(*m, b, idx.a[i - 1], upto, idx)) {
                        auto it = out.find(jdx);
                        if (it == out.end())
                            out.emplace(jdx, c);
                        else {
                            it->second += c;
                            if (it->second == 0) out.erase(it);
                        }
                    }
                }
                return out;
            });
        }
        case 'z': {
            GroupAlgebraElement zl = z_central(n, g.index);
            return TensorOperator(n, k, module, [m, zl](const TensorIndex& idx) {
                TensorVec out;
                for (const auto& [p, c] : zl.terms())
                    for (const auto& [mi, d] : module_apply(*m, p, idx.a0)) {
                        TensorIndex o = idx;
                        o.a0 = mi;
                        auto it = out.find(o);
                        if (it == out.end())
                            out.emplace(o, c * d);
                        else {
                            it->second += c * d;
                            if (it->second == 0) out.erase(it);
                        }
                    }
                return out;
            });
        }
        case 's': {
            if (g.index < 1 || g.index > k - 1) throw std::out_of_range("s index");
            int i = g.index;
            return TensorOperator(n, k, module, [i](const TensorIndex& idx) {
                TensorIndex o = idx;
                std::swap(o.a[i - 1], o.a[i]);
                return TensorVec{{o, Rat(1)}};
            });
        }
        default:
            throw std::invalid_argument("unknown generator kind");
    }
}

TensorOperator psi_element(const PAElement& a, int n, int k,
                           std::shared_ptr<const SnModule> module) {
    if (a.k() != k) throw std::invalid_argument("psi_element: size mismatch");
    struct Term {
        SetPartitionDiagram diagram;
        Rat coeff;
    };
    auto terms = std::make_shared<std::vector<Term>>();
    for (const auto& [d, p] : a.terms()) {
        Rat c = p.eval(Rat(n));
        if (c != 0) terms->push_back({d, c});
    }
    return TensorOperator(n, k, module, [terms, n, k](const TensorIndex& idx) {
        TensorVec out;
        for (const auto& term : *terms) {
            // bottom labels come from idx.a; blocks force equalities
            bool ok = true;
            std::vector<int> top_label(k + 1, 0);  // 0 = unassigned
            std::vector<std::vector<int>> free_blocks;
            for (const auto& blk : term.diagram.blocks()) {
                int bot_val = 0;
                for (int v : blk)
                    if (v < 0) {
                        int val = idx.a[-v - 1];
                        if (bot_val == 0)
                            bot_val = val;
                        else if (bot_val != val) {
                            ok = false;
                            break;
                        }
                    }
                if (!ok) break;
                std::vector<int> tops;
                for (int v : blk)
                    if (v > 0) tops.push_back(v);
                if (tops.empty()) continue;
                if (bot_val != 0)
                    for (int t : tops) top_label[t] = bot_val;
                else
                    free_blocks.push_back(tops);
            }
            if (!ok) continue;
            // sum over labelings of the free (top-only) blocks
            std::vector<int> choice(free_blocks.size(), 1);
            while (true) {
                std::vector<int> label = top_label;
                for (std::size_t b = 0; b < free_blocks.size(); ++b)
                    for (int t : free_blocks[b]) label[t] = choice[b];
                TensorIndex o = idx;
                for (int t = 1; t <= k; ++t) o.a[t - 1] = label[t];
                auto it = out.find(o);
                if (it == out.end())
                    out.emplace(o, term.coeff);
                else {
                    it->second += term.coeff;
                    if (it->second == 0) out.erase(it);
                }
                std::size_t pos = 0;
                while (pos < choice.size() && choice[pos] == n) choice[pos++] = 1;
                if (pos == choice.size()) break;
                ++choice[pos];
            }
        }
        return out;
    });
}

std::vector<std::string> factor_diagram(const SetPartitionDiagram& d) {
    const int k = d.k();
    struct Block {
        std::vector<int> tops, bots;
    };
    std::vector<Block> blocks;
    for (const auto& blk : d.blocks()) {
        Block b;
        for (int v : blk) (v > 0 ? b.tops : b.bots).push_back(v > 0 ? v : -v);
        std::sort(b.tops.begin(), b.tops.end());
        std::sort(b.bots.begin(), b.bots.end());
        blocks.push_back(std::move(b));
    }
    // contiguous column intervals per block, in canonical block order
    std::vector<int> top_col(k + 1, 0), bot_col(k + 1, 0);
    std::vector<std::pair<int, int>> top_iv, bot_iv;  // [first,last] or (0,-1)
    int tc = 1, bc = 1;
    std::vector<int> through;  // block ids with both sides
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        int tfirst = tc, bfirst = bc;
        for (int v : blocks[b].tops) top_col[v] = tc++;
        for (int v : blocks[b].bots) bot_col[v] = bc++;
        top_iv.push_back({tfirst, tc - 1});
        bot_iv.push_back({bfirst, bc - 1});
        if (!blocks[b].tops.empty() && !blocks[b].bots.empty())
            through.push_back(static_cast<int>(b));
    }
    const int q = static_cast<int>(through.size());

    std::vector<std::string> word;
    auto emit_perm = [&word, k](const Perm& pi) {
        // permutation diagram {i, -pi(i)}: product of s-letters of the
        // reversed reduced word
        auto letters = reduced_word_of(pi);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            word.push_back("s" + std::to_string(*it));
    };

    // top boundary -> columns
    Perm pa(k);
    for (int i = 1; i <= k; ++i) pa[i - 1] = top_col[i];
    emit_perm(pa);
    // merge top intervals
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int c = top_iv[b].first; c < top_iv[b].second; ++c)
            word.push_back("e" + std::to_string(2 * c));
    // route representatives to meeting positions 1..q, rest to the cut zone
    Perm pr(k);
    {
        int next = q + 1;
        std::vector<int> dest(k + 1, 0);
        for (int r = 0; r < q; ++r) dest[top_iv[through[r]].first] = r + 1;
        for (int c = 1; c <= k; ++c)
            if (dest[c] == 0) dest[c] = next++;
        for (int c = 1; c <= k; ++c) pr[c - 1] = dest[c];
    }
    emit_perm(pr);
    // cut everything outside the meeting zone
    for (int c = q + 1; c <= k; ++c) word.push_back("e" + std::to_string(2 * c - 1));
    // meeting positions -> bottom representative columns
    Perm ps(k);
    {
        std::vector<int> dest(k + 1, 0);
        std::vector<char> used(k + 1, 0);
        for (int r = 0; r < q; ++r) {
            dest[r + 1] = bot_iv[through[r]].first;
            used[dest[r + 1]] = 1;
        }
        int next = 1;
        for (int c = q + 1; c <= k; ++c) {
            while (used[next]) ++next;
            dest[c] = next;
            used[next] = 1;
        }
        for (int c = 1; c <= k; ++c) ps[c - 1] = dest[c];
    }
    emit_perm(ps);
    // merge bottom intervals
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int c = bot_iv[b].first; c < bot_iv[b].second; ++c)
            word.push_back("e" + std::to_string(2 * c));
    // columns -> bottom boundary
    Perm pe(k);
    for (int i = 1; i <= k; ++i) pe[bot_col[i] - 1] = i;
    emit_perm(pe);

    // verify the word reproduces the diagram exactly
    PAElement prod = PAElement::one(k);
    for (const auto& g : word) {
        if (g[0] == 's')
            prod *= pa_s(std::stoi(g.substr(1)), k);
        else
            prod *= pa_e(std::stoi(g.substr(1)), k);
    }
    if (prod != PAElement(d)) throw std::logic_error("factor_diagram: word mismatch");
    return word;
}

TensorOperator psi_element_by_factorization(const PAElement& a, int n, int k,
                                            std::shared_ptr<const SnModule> module) {
    TensorOperator acc(n, k, module, [](const TensorIndex&) { return TensorVec{}; });
    for (const auto& [d, p] : a.terms()) {
        Rat c = p.eval(Rat(n));
        if (c == 0) continue;
        TensorOperator op = TensorOperator::identity(n, k, module);
        for (const auto& g : factor_diagram(d)) op = op * psi_generator(g, n, k, module);
        acc = acc + c * op;
    }
    return acc;
}

bool certify_identity(const PAElement& lhs, const PAElement& rhs) {
    if (lhs.k() != rhs.k()) return false;
    const int k = lhs.k();
    const int degree = static_cast<int>(std::max(lhs.z_degree(), rhs.z_degree()));
    for (int n = 2 * k; n <= 2 * k + degree; ++n) {
        auto module = std::make_shared<SnModule>(SnModule::trivial(n));
        if (!(psi_element(lhs, n, k, module) == psi_element(rhs, n, k, module))) return false;
    }
    return true;
}

namespace {

int rank_of_rows(std::vector<std::vector<Rat>> rows) {
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        int pivot = -1;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] != 0) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
            Rat f = rows[r][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
        if (rank == static_cast<int>(rows.size())) break;
    }
    return rank;
}

}  // namespace

int witness_rank(int max_m, int n) {
    const int k = 2;
    auto module = std::make_shared<SnModule>(SnModule::regular(n));
    auto e1 = psi_generator("e1", n, k, module);
    auto e2 = psi_generator("e2", n, k, module);
    auto x1 = psi_generator("x1", n, k, module);
    auto group = symmetric_group(n);
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = static_cast<int>(i);
    // identity group element tensor v_{(1,2)}
    TensorIndex start{index[perm_identity(n)] + 1, {1, 2}};
    TensorVec cur = e2(e1(TensorVec{{start, Rat(1)}}));
    std::vector<std::vector<Rat>> rows;
    for (int m = 0; m <= max_m; ++m) {
        // extract module coordinates at tensor part (2,2)
        std::vector<Rat> row(group.size(), Rat(0));
        for (const auto& [idx, c] : cur) {
            if (idx.a != std::vector<int>{2, 2})
                throw std::logic_error("witness vector leaves the expected line");
            row[idx.a0 - 1] = c;
        }
        rows.push_back(std::move(row));
        if (m < max_m) cur = x1(cur);
    }
    return rank_of_rows(std::move(rows));
}

bool witness_independence(int max_m, int n) {
    if (n <= max_m + 1) throw std::invalid_argument("witness_independence needs n > max_m + 1");
    return witness_rank(max_m, n) == max_m + 1;
}

}  // namespace apa
