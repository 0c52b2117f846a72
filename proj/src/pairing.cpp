#include <qmobius/pairing.hpp>

#include <stdexcept>

namespace qmobius {

namespace {

ExpVec single(GenId g) {
    ExpVec w{};
    w[g] = 1;
    return w;
}

} // namespace

Duality::Duality(const Presentation& uq, const Presentation& funq) : uq_(&uq), funq_(&funq) {
    auto u_id = [&](const char* t) { return *uq.gen_by_token(t); };
    auto f_id = [&](const char* t) { return *funq.gen_by_token(t); };
    const GenId kinv = u_id("kinv"), k = u_id("k"), e = u_id("e"), es = u_id("es");
    const GenId a = f_id("a"), as = f_id("as"), b = f_id("b"), bs = f_id("bs");

    for (auto& row : table_)
        for (auto& x : row) x = Scalar();
    table_[k][a] = Scalar::q_half(1);
    table_[k][as] = Scalar::q_half(-1);
    table_[e][bs] = -Scalar::q_pow(-1);
    table_[es][b] = Scalar(1);

    // Solve <k^-1 k, g> = counit(g) for the unknown row <k^-1, .>:
    // sum over Delta(g) of x_{g'} * <k, g''> = counit(g), a 4x4 linear system.
    Scalar m[4][5];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 5; ++c) m[r][c] = Scalar();
    for (GenId g = 0; g < 4; ++g) {
        for (const auto& [c, g1, g2] : funq.gen(g).coproduct)
            m[g][g1] += c * table_[k][g2];
        m[g][4] = funq.gen(g).counit;
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (!m[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::logic_error("pairing: k^-1 row underdetermined");
        for (int c = 0; c < 5; ++c) std::swap(m[col][c], m[pivot][c]);
        Scalar inv = m[col][col].inverse();
        for (int c = 0; c < 5; ++c) m[col][c] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (int c = 0; c < 5; ++c) m[r][c] -= f * m[col][c];
        }
    }
    for (GenId g = 0; g < 4; ++g) table_[kinv][g] = m[g][4];

    // Cross-check against the opposite product order <k k^-1, g> = counit(g).
    for (GenId g = 0; g < 4; ++g) {
        Scalar lhs;
        for (const auto& [c, g1, g2] : funq.gen(g).coproduct)
            lhs += c * table_[k][g1] * table_[kinv][g2];
        if (lhs != funq.gen(g).counit)
            throw std::logic_error("pairing: derived k^-1 row fails <k k^-1, x> = counit(x)");
    }
}

Scalar Duality::pair_seq(const Word& uw, const Word& fw) const {
    if (fw.empty()) {
        Scalar out(1);
        for (GenId g : uw) out *= uq_->gen(g).counit;
        return out;
    }
    if (uw.empty()) {
        Scalar out(1);
        for (GenId g : fw) out *= funq_->gen(g).counit;
        return out;
    }
    if (uw.size() == 1 && fw.size() == 1) return table_[uw[0]][fw[0]];
    if (fw.size() == 1) {
        // U-word against a single generator: iterate Delta on the f side.
        TensorElement t = iterated_coproduct(Element::generator(*funq_, fw[0]),
                                             static_cast<int>(uw.size()));
        Scalar out;
        for (const auto& [ws, c] : t.terms()) {
            Scalar prod = c;
            for (size_t i = 0; i < uw.size() && !prod.is_zero(); ++i)
                prod *= pair_words(single(uw[i]), ws[i]);
            out += prod;
        }
        return out;
    }
    // f-word of length n: pair against the n-fold coproduct of U.
    TensorElement t = iterated_coproduct(uq_->normal_form(uw), static_cast<int>(fw.size()));
    Scalar out;
    for (const auto& [ws, c] : t.terms()) {
        Scalar prod = c;
        for (size_t j = 0; j < fw.size() && !prod.is_zero(); ++j)
            prod *= pair_words(ws[j], single(fw[j]));
        out += prod;
    }
    return out;
}

Scalar Duality::pair_words(const ExpVec& uw, const ExpVec& fw) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find({uw, fw});
        if (it != cache_.end()) return it->second;
    }
    Scalar value = pair_seq(uq_->expand(uw), funq_->expand(fw));
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(std::make_pair(uw, fw), std::move(value)).first->second;
}

Scalar Duality::pair(const Element& U, const Element& f) const {
    Scalar out;
    for (const auto& [uw, cu] : U.terms())
        for (const auto& [fw, cf] : f.terms()) out += cu * cf * pair_words(uw, fw);
    return out;
}

Scalar Duality::pair_dual_strategy(const Element& U, const Element& f) const {
    Scalar out;
    for (const auto& [uw, cu] : U.terms()) {
        Word useq = uq_->expand(uw);
        for (const auto& [fw, cf] : f.terms()) {
            Scalar c = cu * cf;
            if (useq.empty()) {
                out += c * pair_words(uw, fw);
                continue;
            }
            TensorElement t = iterated_coproduct(funq_->normal_form(funq_->expand(fw)),
                                                 static_cast<int>(useq.size()));
            for (const auto& [ws, tc] : t.terms()) {
                Scalar prod = c * tc;
                for (size_t i = 0; i < useq.size() && !prod.is_zero(); ++i)
                    prod *= pair_words(single(useq[i]), ws[i]);
                out += prod;
            }
        }
    }
    return out;
}

bool Duality::check_star_compat(const Element& U, const Element& f) const {
    Scalar lhs = pair(U.star(), f);
    Scalar rhs = pair(U, antipode(f).star()).conjugate();
    return lhs == rhs;
}

} // namespace qmobius
