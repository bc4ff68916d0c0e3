#include "bitpath/vertex_set.hpp"

#include <ostream>

namespace bitpath {

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    os << '(';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) os << ',';
        os << (s.test(static_cast<VertexId>(i)) ? '1' : '0');
    }
    return os << ')';
}

}  // namespace bitpath
