#pragma once

#include <string>

namespace clark {

enum class ModelKind { K1, K2, L1, L2 };

// K1 = -d^2/dx^2 and K2 = d^4/dx^4 on (0, inf); L1 = i d/dx and L2 = -d^2/dx^2 on (-a, a).
struct ModelId {
    ModelKind kind = ModelKind::K1;
    double a = 0.0;

    static ModelId k1() { return {ModelKind::K1, 0.0}; }
    static ModelId k2() { return {ModelKind::K2, 0.0}; }
    static ModelId l1(double a);
    static ModelId l2(double a);

    bool half_line() const { return kind == ModelKind::K1 || kind == ModelKind::K2; }
    // Order of the differential expression.
    int order() const;
    // Deficiency index.
    int rank() const;
    std::string name() const;
};

// Parses "k1", "k2", "l1", "l2" (case-insensitive); a is ignored for half-line models.
ModelId parse_model(const std::string& tag, double a);

}  // namespace clark
