#include "qan/binding.hpp"

#include <sstream>

namespace qan {

std::string to_string(const ScalarSpec& s) {
    if (s.is_dec()) return s.dec;
    std::string out = s.coef.get_str();
    if (s.exp != 0) out += "*q^" + std::to_string(s.exp);
    return out;
}

namespace {

void append_testfn(std::ostringstream& os, const char* tag, const TestFnSpec& fn) {
    if (!fn.present()) return;
    os << ' ' << tag << '=';
    if (fn.kind == TestFnSpec::Kind::Linear) {
        os << "lin(";
        for (size_t i = 0; i < fn.factors.size(); ++i) {
            if (i) os << ',';
            os << to_string(fn.factors[i]);
        }
        if (fn.coord_factor.coef != 0) os << ";w=" << to_string(fn.coord_factor);
        os << ')';
    } else {
        os << "ratio(" << to_string(fn.c) << ',' << to_string(fn.d) << ','
           << to_string(fn.beta) << ',' << to_string(fn.gamma) << ')';
    }
}

} // namespace

std::string binding_digest(const BindingSpec& b) {
    std::ostringstream os;
    os << "n=" << b.n;
    if (b.q_rational != 0) os << " q=" << b.q_rational.get_str();
    os << " x=[";
    for (size_t i = 0; i < b.x.size(); ++i) {
        if (i) os << ',';
        os << to_string(b.x[i]);
    }
    os << ']';
    for (const auto& [k, v] : b.scalars) os << ' ' << k << '=' << to_string(v);
    for (const auto& [k, v] : b.lists) {
        os << ' ' << k << "=[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << to_string(v[i]);
        }
        os << ']';
    }
    for (const auto& [k, v] : b.naturals) os << ' ' << k << '=' << v;
    for (const auto& [k, v] : b.multiindices) {
        os << ' ' << k << "=(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << v[i];
        }
        os << ')';
    }
    append_testfn(os, "K", b.K);
    append_testfn(os, "f1", b.f1);
    append_testfn(os, "fn", b.fn);
    if (b.beta.present()) {
        os << " beta={";
        for (size_t i = 0; i < b.beta.support.size(); ++i) {
            if (i) os << ';';
            os << '(';
            for (size_t j = 0; j < b.beta.support[i].first.size(); ++j) {
                if (j) os << ',';
                os << b.beta.support[i].first[j];
            }
            os << ")->" << b.beta.support[i].second.get_str();
        }
        os << '}';
    }
    return os.str();
}

} // namespace qan
