#include "colour_lab/gadgets.hpp"

namespace colour_lab {

// Found by decide(rs, k=4) on build(rs-forcing); the H part is the first 25 ids.
const std::vector<int>& rs_forcing_derived_colours() {
    static const std::vector<int> colours = {
        1, 3, 2, 1, 0, 0, 2, 3, 1, 2, 3, 1, 0, 0, 2, 3, 3, 2, 1, 3, 0, 0, 2, 1, 3, 0, 2, 3, 1,
        3, 3, 2, 1, 2, 0, 3, 2, 0, 2, 1, 3, 1, 3, 0, 2, 0, 3, 2, 1, 3, 2, 3, 1, 3, 0, 3, 2, 0,
        2, 1, 3, 1, 2, 0, 2, 0, 3, 1, 3, 2, 3, 1, 2, 0, 3, 2, 0, 3, 1, 2, 2, 1, 3, 2, 0};
    return colours;
}

}  // namespace colour_lab
