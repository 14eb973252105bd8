#include "expsum/numeric.hpp"

#include <cstdio>

namespace expsum {

std::string fmt_sig(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
    return buf;
}

std::string fmt_sig_full(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.*g", sig, v);
    std::string s = buf;
    // "%#g" can leave a bare trailing point for integral values ("5." at sig=1).
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

} // namespace expsum
