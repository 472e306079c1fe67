#include "assocalg/ncpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace assocalg {

NcPoly NcPoly::term(Scalar c, Word w) {
    NcPoly p;
    p.add_term(c, w);
    return p;
}

const Word& NcPoly::lead_word() const {
    if (terms_.empty()) throw std::logic_error("NcPoly: zero polynomial has no leading word");
    return terms_.begin()->first;
}

const Scalar& NcPoly::lead_coeff() const {
    if (terms_.empty()) throw std::logic_error("NcPoly: zero polynomial has no leading coefficient");
    return terms_.begin()->second;
}

int NcPoly::degree() const { return terms_.empty() ? -1 : static_cast<int>(lead_word().size()); }

Scalar NcPoly::constant_term() const {
    auto it = terms_.find(Word{});
    return it == terms_.end() ? Scalar(0) : it->second;
}

void NcPoly::add_term(const Scalar& c, const Word& w) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(c, w);
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(-c, w);
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    NcPoly r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(c1 * c2, w);
        }
    return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
    NcPoly r;
    for (const auto& [w, coeff] : terms_) r.add_term(c * coeff, w);
    return r;
}

NcPoly NcPoly::conjugated(const Word& prefix, const Word& suffix) const {
    NcPoly r;
    for (const auto& [w, c] : terms_) {
        Word out = prefix;
        out.insert(out.end(), w.begin(), w.end());
        out.insert(out.end(), suffix.begin(), suffix.end());
        r.add_term(c, out);
    }
    return r;
}

NcPoly NcPoly::monic() const {
    if (terms_.empty()) return {};
    return scaled(lead_coeff().inv());
}

NcPoly NcPoly::degree_part(int d) const {
    NcPoly r;
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == d) r.add_term(c, w);
    return r;
}

Vec NcPoly::linear_part(std::size_t k) const {
    Vec v(k);
    for (const auto& [w, c] : terms_)
        if (w.size() == 1) v[w[0]] = c;
    return v;
}

std::string NcPoly::str(const std::vector<std::string>& labels) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        out << c.str() << "*";
        if (w.empty()) {
            out << "1";
        } else {
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) out << ".";
                out << labels.at(w[i]);
            }
        }
        first = false;
    }
    return out.str();
}

}  // namespace assocalg
