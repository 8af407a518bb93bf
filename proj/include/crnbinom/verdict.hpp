#pragma once

#include <string>

namespace crnbinom {

enum class Verdict { UnconditionallyBinomial, NotUnconditionallyBinomial };

inline std::string to_string(Verdict v) {
    return v == Verdict::UnconditionallyBinomial ? "UnconditionallyBinomial"
                                                 : "NotUnconditionallyBinomial";
}

}  // namespace crnbinom
