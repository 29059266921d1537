#pragma once

#include "exsym/cocycle.hpp"

namespace exsym {

// "tfull-<case>[:k=..,l=..,m=..][:c=..][:a0=..]", case in {1,2a,2b,3,4,5};
// k/l/m/c segments are valid for cases 4 and 5 only, a0 counts appended
// trivial definite pairs and is valid everywhere.
struct CatalogDescriptor {
    std::string case_id = "1";
    int k = 0, l = 0, m = 0;
    Rat c = 0;
    int a0 = 0;
};

std::string format_descriptor(const CatalogDescriptor& d);
CatalogDescriptor parse_descriptor(const std::string& s);  // throws std::invalid_argument

struct CatalogData {
    LiePair l;
    ModuleData a;
    QuadCocycle z;
};

CatalogData catalog(const CatalogDescriptor& d);

struct CatalogFamily {
    std::string id;       // canonical descriptor of the base member
    std::string summary;  // one-line description
};

std::vector<CatalogFamily> catalog_families();

// a and b are modules over the same pair; block direct sum
ModuleData module_direct_sum(const ModuleData& a, const ModuleData& b, int l_dim);

}  // namespace exsym
