#include "rackcert/otype.hpp"

#include "rackcert/rack.hpp"

namespace rackcert {

namespace {

const RackTable& octahedral()
{
    static const RackTable table = octahedral_rack();
    return table;
}

void require_range(int i, int bound)
{
    if (i < 1 || i > bound)
        throw InputError("octahedral index " + std::to_string(i) + " outside 1.." + std::to_string(bound));
}

} // namespace

int octa_op(int i, int j)
{
    require_range(i, 6);
    require_range(j, 6);
    return octahedral().op(i - 1, j - 1) + 1;
}

int octa2_op(int i, int j)
{
    require_range(i, 12);
    require_range(j, 12);
    const int copy = j > 6 ? 6 : 0;
    return octa_op((i - 1) % 6 + 1, (j - 1) % 6 + 1) + copy;
}

std::string to_string(TwistClass c)
{
    switch (c) {
    case TwistClass::A:
        return "a";
    case TwistClass::B:
        return "b";
    case TwistClass::C:
        return "c";
    case TwistClass::D:
        return "d";
    }
    return "?";
}

} // namespace rackcert
