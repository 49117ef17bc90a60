#ifndef QWH_VERSION_HPP
#define QWH_VERSION_HPP

namespace qwh {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
