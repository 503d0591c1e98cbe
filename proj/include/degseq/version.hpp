#ifndef DEGSEQ_VERSION_HPP
#define DEGSEQ_VERSION_HPP

namespace degseq {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace degseq

#endif
