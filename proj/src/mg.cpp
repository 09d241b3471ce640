// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gcs/mg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "gcs/error.hpp"

namespace gcs {

namespace {

using rep = Weight::rep;
constexpr rep kNegInf = Weight::kNegInf;
constexpr rep kPosInf = Weight::kPosInf;

bool valid_const_pair(const Universe& u, std::size_t i, std::size_t j, rep w) {
    if (!u.is_const_node(i) || !u.is_const_node(j)) return false;
    if (w == kPosInf) return false;
    if (w == kNegInf) return true;
    return static_cast<__int128>(u.const_value(i)) - u.const_value(j) >= w;
}

void require_same(const UniversePtr& a, const UniversePtr& b, const char* op) {
    if (!same_universe(a, b)) {
        throw InvalidInput(std::string(op) + ": graphs over different node sets");
    }
}

} // namespace

MonotonicityGraph::MonotonicityGraph(UniversePtr universe)
    : universe_(std::move(universe)), n_(universe_->size()), w_(n_ * n_, kNegInf) {}

MonotonicityGraph MonotonicityGraph::from_constraint(UniversePtr universe, const GapConstraint& constraint) {
    MonotonicityGraph m(std::move(universe));
    for (const auto& c : constraint) {
        const auto from = m.universe_->index_of(c.lhs);
        const auto to = m.universe_->index_of(c.rhs);
        m.tighten(from, to, Weight(c.offset));
    }
    return m;
}

Weight MonotonicityGraph::weight(const Node& from, const Node& to) const {
    return weight(universe_->index_of(from), universe_->index_of(to));
}

void MonotonicityGraph::tighten(std::size_t from, std::size_t to, Weight w) {
    auto& cell = at(from, to);
    if (w.raw() > cell) {
        cell = w.raw();
        closed_ = false;
    }
}

std::vector<MonotonicityGraph::Edge> MonotonicityGraph::edges() const {
    std::vector<Edge> out;
    const auto& u = *universe_;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const rep w = w_[i * n_ + j];
            if (w == kNegInf) continue;
            if (i == j && w <= 0) continue;
            if (valid_const_pair(u, i, j, w)) continue;
            out.push_back({i, j, Weight(w)});
        }
    }
    return out;
}

bool operator==(const MonotonicityGraph& a, const MonotonicityGraph& b) {
    return same_universe(a.universe_, b.universe_) && a.w_ == b.w_;
}

std::string MonotonicityGraph::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& e : edges()) {
        if (!first) os << ", ";
        first = false;
        os << universe_->node(e.from).str() << " -" << e.weight.str() << "-> " << universe_->node(e.to).str();
    }
    os << "}";
    return os.str();
}

// Seeded constants differ by fixed amounts, so a satisfiable graph closes
// exactly like the graph with every constant folded into the smallest one.
// Only a Satisfiable verdict writes w_. Unknown covers inputs with weights
// large enough to risk saturation.
MonotonicityGraph::Collapsed MonotonicityGraph::close_collapsed() {
    const auto& u = *universe_;
    const std::size_t n = n_;
    const std::size_t nv = u.const_base();
    const std::size_t m = nv + 1;
    constexpr rep kBig = rep{1} << 60;
    const rep c0 = u.const_value(nv);
    for (const auto c : u.consts()) {
        if (c > kBig / 4 || c < -kBig / 4) return Collapsed::Unknown;
    }
    for (const auto x : w_) {
        if (x == kPosInf || (x != kNegInf && (x > kBig || x < -kBig))) return Collapsed::Unknown;
    }
    for (std::size_t i = nv; i < n; ++i) {
        for (std::size_t j = nv; j < n; ++j) {
            const rep w = w_[i * n + j];
            if (w != kNegInf && w > u.const_value(i) - u.const_value(j)) return Collapsed::Unknown;
        }
    }

    std::vector<rep> r(m * m, kNegInf);
    const std::size_t a = nv;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ri = std::min(i, a);
        const rep oi = i < nv ? 0 : u.const_value(i) - c0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i >= nv && j >= nv) continue;
            const rep w = w_[i * n + j];
            if (w == kNegInf) continue;
            const std::size_t rj = std::min(j, a);
            const rep oj = j < nv ? 0 : u.const_value(j) - c0;
            // i - j >= w  <=>  (i - oi) - (j - oj) >= w - oi + oj
            const rep shifted = w - oi + oj;
            if (shifted > r[ri * m + rj]) r[ri * m + rj] = shifted;
        }
    }
    for (std::size_t k = 0; k < m; ++k) r[k * m + k] = std::max<rep>(r[k * m + k], 0);

    for (std::size_t k = 0; k < m; ++k) {
        const rep* row_k = r.data() + k * m;
        for (std::size_t i = 0; i < m; ++i) {
            const rep rik = r[i * m + k];
            if (rik == kNegInf) continue;
            rep* row_i = r.data() + i * m;
            for (std::size_t j = 0; j < m; ++j) {
                const rep rkj = row_k[j];
                if (rkj == kNegInf) continue;
                const rep cand = add_weights(rik, rkj);
                if (cand > row_i[j]) row_i[j] = cand;
            }
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (r[k * m + k] > 0) return Collapsed::Unsatisfiable;
    }

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ri = std::min(i, a);
        const rep oi = i < nv ? 0 : u.const_value(i) - c0;
        for (std::size_t j = 0; j < n; ++j) {
            const rep oj = j < nv ? 0 : u.const_value(j) - c0;
            if (i >= nv && j >= nv) {
                w_[i * n + j] = u.const_value(i) - u.const_value(j);
                continue;
            }
            const rep v = r[ri * m + std::min(j, a)];
            w_[i * n + j] = v == kNegInf ? kNegInf : v + oi - oj;
        }
    }
    closed_ = true;
    satisfiable_ = true;
    return Collapsed::Satisfiable;
}

void MonotonicityGraph::close_in_place(bool exact_unsat) {
    if (closed_) return;
    const auto& u = *universe_;
    if (u.const_count() >= 2) {
        const auto verdict = close_collapsed();
        if (verdict == Collapsed::Satisfiable) return;
        if (verdict == Collapsed::Unsatisfiable && !exact_unsat) {
            std::fill(w_.begin(), w_.end(), kPosInf);
            closed_ = true;
            satisfiable_ = false;
            return;
        }
    }
    const std::size_t n = n_;
    rep* w = w_.data();

    for (std::size_t i = u.const_base(); i < n; ++i) {
        for (std::size_t j = u.const_base(); j < n; ++j) {
            if (i == j) continue;
            const rep d = u.const_value(i) - u.const_value(j);
            if (d > w[i * n + j]) w[i * n + j] = d;
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        const rep* row_k = w + k * n;
        for (std::size_t i = 0; i < n; ++i) {
            const rep wik = w[i * n + k];
            if (wik == kNegInf) continue;
            rep* row_i = w + i * n;
            for (std::size_t j = 0; j < n; ++j) {
                const rep wkj = row_k[j];
                if (wkj == kNegInf) continue;
                const rep cand = add_weights(wik, wkj);
                if (cand > row_i[j]) row_i[j] = cand;
            }
        }
    }

    satisfiable_ = true;
    std::vector<std::size_t> hot;
    for (std::size_t k = 0; k < n; ++k) {
        if (w[k * n + k] > 0) hot.push_back(k);
    }
    if (hot.empty()) {
        for (std::size_t k = 0; k < n; ++k) w[k * n + k] = 0;
    } else {
        satisfiable_ = false;
        for (const auto k : hot) {
            for (std::size_t i = 0; i < n; ++i) {
                if (w[i * n + k] == kNegInf) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (w[k * n + j] != kNegInf) w[i * n + j] = kPosInf;
                }
            }
        }
    }
    closed_ = true;
}

MonotonicityGraph closure(const MonotonicityGraph& m) {
    MonotonicityGraph out = m;
    out.close_in_place();
    return out;
}

bool is_satisfiable(const MonotonicityGraph& m) {
    if (m.is_closed()) return m.closed_satisfiable();
    return closure(m).closed_satisfiable();
}

std::size_t degree(const MonotonicityGraph& m) {
    const auto& u = *m.universe();
    std::size_t deg = 0;
    const auto raw = m.raw();
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (u.is_const_node(i) && u.is_const_node(j)) continue;
            const rep w = raw[i * n + j];
            if (w == kNegInf || w == kPosInf || w >= 0) continue;
            deg = std::max(deg, static_cast<std::size_t>(-w));
        }
    }
    return deg;
}

MonotonicityGraph restrict(const MonotonicityGraph& m, const std::vector<std::string>& vars) {
    const auto& src = *m.universe_;
    std::vector<std::string> kept;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < src.var_count(); ++i) {
        if (std::find(vars.begin(), vars.end(), src.vars()[i]) != vars.end()) {
            kept.push_back(src.vars()[i]);
            index.push_back(src.var_node(i));
        }
    }
    for (const auto& v : vars) {
        if (!src.find_var(v)) throw InvalidInput("restrict: unknown variable '" + v + "'");
    }
    for (std::size_t j = 0; j < src.const_count(); ++j) index.push_back(src.const_node(j));

    UniversePtr target = (!src.is_transitional() && kept.size() == src.var_count())
                             ? m.universe_
                             : Universe::state(std::move(kept), src.consts());
    MonotonicityGraph out(target);
    const std::size_t n = out.n_;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.w_[i * n + j] = m.w_[index[i] * m.n_ + index[j]];
        }
    }
    out.closed_ = m.closed_;
    out.satisfiable_ = m.satisfiable_;
    return out;
}

MonotonicityGraph project(const MonotonicityGraph& m, const std::vector<std::string>& vars) {
    return restrict(closure(m), vars);
}

MonotonicityGraph intersect(const MonotonicityGraph& m, const MonotonicityGraph& n) {
    require_same(m.universe_, n.universe_, "intersect");
    MonotonicityGraph out = m;
    for (std::size_t i = 0; i < out.w_.size(); ++i) {
        out.w_[i] = std::max(out.w_[i], n.w_[i]);
    }
    out.closed_ = false;
    return out;
}

MonotonicityGraph compose(const MonotonicityGraph& g, const MonotonicityGraph& m) {
    const auto& gu = *g.universe_;
    const auto& mu = *m.universe_;
    if (!gu.is_transitional() || mu.is_transitional() || gu.vars() != mu.vars() || gu.consts() != mu.consts()) {
        throw InvalidInput("compose: expects a transitional graph and a state graph over the same symbols");
    }
    const std::size_t nv = mu.var_count();
    const std::size_t nm = m.n_;
    std::vector<std::size_t> renamed(nm);
    for (std::size_t i = 0; i < nv; ++i) renamed[i] = gu.primed_node(i);
    for (std::size_t j = 0; j < mu.const_count(); ++j) renamed[mu.const_node(j)] = gu.const_node(j);

    MonotonicityGraph t = g;
    t.closed_ = false;
    const std::size_t nt = t.n_;
    for (std::size_t i = 0; i < nm; ++i) {
        for (std::size_t j = 0; j < nm; ++j) {
            const rep w = m.w_[i * nm + j];
            rep& cell = t.w_[renamed[i] * nt + renamed[j]];
            if (w > cell) cell = w;
        }
    }
    t.close_in_place(false);

    MonotonicityGraph out(m.universe_);
    std::vector<std::size_t> back(nm);
    for (std::size_t i = 0; i < nv; ++i) back[i] = gu.var_node(i);
    for (std::size_t j = 0; j < mu.const_count(); ++j) back[mu.const_node(j)] = gu.const_node(j);
    for (std::size_t i = 0; i < nm; ++i) {
        for (std::size_t j = 0; j < nm; ++j) {
            out.w_[i * nm + j] = t.w_[back[i] * nt + back[j]];
        }
    }
    out.closed_ = true;
    out.satisfiable_ = t.satisfiable_;
    return out;
}

std::optional<MonotonicityGraph> with_edge(const MonotonicityGraph& m, std::size_t from, std::size_t to, Weight w) {
    assert(m.is_closed() && m.closed_satisfiable());
    const std::size_t n = m.n_;
    const rep k = w.raw();
    if (k == kNegInf) return m;
    if (k == kPosInf || add_weights(k, m.w_[to * n + from]) > 0) return std::nullopt;
    if (m.w_[from * n + to] >= k) return m;
    MonotonicityGraph out = m;
    // any improved path runs i -> from -k-> to -> j
    for (std::size_t i = 0; i < n; ++i) {
        const rep wi = m.w_[i * n + from];
        if (wi == kNegInf) continue;
        const rep head = add_weights(wi, k);
        rep* row = out.w_.data() + i * n;
        const rep* tail = m.w_.data() + to * n;
        for (std::size_t j = 0; j < n; ++j) {
            const rep cand = add_weights(head, tail[j]);
            if (cand > row[j]) row[j] = cand;
        }
    }
    return out;
}

bool covers(const MonotonicityGraph& n, const MonotonicityGraph& m) {
    require_same(n.universe(), m.universe(), "covers");
    const MonotonicityGraph& cn = n.is_closed() ? n : closure(n);
    const MonotonicityGraph& cm = m.is_closed() ? m : closure(m);
    if (!cm.closed_satisfiable()) return true;
    if (!cn.closed_satisfiable()) return false;
    const auto a = cn.raw();
    const auto b = cm.raw();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

bool evaluate(const MonotonicityGraph& m, std::span<const std::int64_t> values) {
    const auto& u = *m.universe();
    const std::size_t n = m.size();
    const std::size_t nvals = u.const_base();
    if (values.size() != nvals) {
        throw InvalidInput("evaluate: valuation has " + std::to_string(values.size()) + " values, expected " +
                           std::to_string(nvals));
    }
    auto value = [&](std::size_t idx) -> __int128 {
        return idx < nvals ? values[idx] : u.const_value(idx);
    };
    const auto raw = m.raw();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const rep w = raw[i * n + j];
            if (w == kNegInf) continue;
            if (w == kPosInf) return false;
            if (value(i) - value(j) < w) return false;
        }
    }
    return true;
}

MonotonicityGraph canonicalize(const MonotonicityGraph& m) {
    MonotonicityGraph c = closure(m);
    if (!c.closed_satisfiable()) throw InvalidInput("canonicalize: unsatisfiable graph");
    return c;
}

std::vector<MonotonicityGraph::Edge> reduced_basis(const MonotonicityGraph& m) {
    assert(m.is_closed() && m.closed_satisfiable());
    const auto& u = *m.universe();
    const std::size_t n = m.size();
    const auto w = m.raw();
    auto W = [&](std::size_t i, std::size_t j) { return w[i * n + j]; };
    auto fixed_gap = [&](std::size_t i, std::size_t j) {
        return W(i, j) != kNegInf && W(j, i) != kNegInf && add_weights(W(i, j), W(j, i)) == 0;
    };

    // Classes of nodes at fixed distance from each other. All constants share
    // one class; its representative is the smallest constant.
    std::vector<std::size_t> cls(n, n);
    std::vector<std::vector<std::size_t>> members;
    auto open_class = [&](std::size_t rep_node) {
        const std::size_t id = members.size();
        members.push_back({});
        for (std::size_t j = 0; j < n; ++j) {
            if (cls[j] == n && (j == rep_node || fixed_gap(rep_node, j))) {
                cls[j] = id;
                members.back().push_back(j);
            }
        }
    };
    if (u.const_count() > 0) open_class(u.const_base());
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] == n) open_class(i);
    }

    std::vector<MonotonicityGraph::Edge> out;
    for (const auto& mem : members) {
        const std::size_t head = mem.front();
        if (u.is_const_node(head)) {
            for (const auto x : mem) {
                if (u.is_const_node(x)) continue;
                out.push_back({x, head, Weight(W(x, head))});
                out.push_back({head, x, Weight(W(head, x))});
            }
        } else if (mem.size() > 1) {
            for (std::size_t k = 0; k < mem.size(); ++k) {
                const auto a = mem[k];
                const auto b = mem[(k + 1) % mem.size()];
                out.push_back({a, b, Weight(W(a, b))});
            }
        }
    }

    for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = 0; y < members.size(); ++y) {
            if (x == y) continue;
            const auto rx = members[x].front();
            const auto ry = members[y].front();
            const rep wxy = W(rx, ry);
            if (wxy == kNegInf) continue;
            bool implied = false;
            for (std::size_t z = 0; z < members.size() && !implied; ++z) {
                if (z == x || z == y) continue;
                const auto rz = members[z].front();
                implied = add_weights(W(rx, rz), W(rz, ry)) >= wxy;
            }
            if (!implied) out.push_back({rx, ry, Weight(wxy)});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
    return out;
}

} // namespace gcs
