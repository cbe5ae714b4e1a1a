#include "clark/model_id.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "clark/errors.hpp"

namespace clark {

ModelId ModelId::l1(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("L1 requires a > 0");
    return {ModelKind::L1, a};
}

ModelId ModelId::l2(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("L2 requires a > 0");
    return {ModelKind::L2, a};
}

int ModelId::order() const {
    switch (kind) {
        case ModelKind::K1: return 2;
        case ModelKind::K2: return 4;
        case ModelKind::L1: return 1;
        case ModelKind::L2: return 2;
    }
    return 0;
}

int ModelId::rank() const {
    return (kind == ModelKind::K1 || kind == ModelKind::L1) ? 1 : 2;
}

std::string ModelId::name() const {
    switch (kind) {
        case ModelKind::K1: return "k1";
        case ModelKind::K2: return "k2";
        case ModelKind::L1: {
            std::ostringstream os;
            os.precision(17);
            os << "l1(a=" << a << ")";
            return os.str();
        }
        case ModelKind::L2: {
            std::ostringstream os;
            os.precision(17);
            os << "l2(a=" << a << ")";
            return os.str();
        }
    }
    return "?";
}

ModelId parse_model(const std::string& tag, double a) {
    std::string t = tag;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "k1") return ModelId::k1();
    if (t == "k2") return ModelId::k2();
    if (t == "l1") return ModelId::l1(a);
    if (t == "l2") return ModelId::l2(a);
    throw DomainError("unknown model '" + tag + "'");
}

}  // namespace clark
