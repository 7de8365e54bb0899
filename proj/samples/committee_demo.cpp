// Turns a stake snapshot into a virtual committee and pre-distributes a
// secret so that no light coalition can reconstruct it.

#include "swiper/swiper.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    using namespace swiper;
    if (argc != 2) {
        std::cerr << "usage: committee_demo <weights.csv>\n";
        return 2;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 2;
    }
    const WeightDistribution dist = WeightDistribution::from_csv(in);

    // Corrupt coalitions hold < 1/4 of the stake; the nominal protocol
    // tolerates < 1/3 corrupt committee members.
    const ProblemSpec spec = ProblemSpec::weight_restriction(Rational(1, 4), Rational(1, 3));
    const SolveReport report = solve(spec, dist);
    std::cout << "parties: " << dist.size() << ", committee size: " << report.total
              << " (bound " << report.bound << ")\n";

    const VirtualCommittee committee = virtual_committee(report.assignment);
    const auto params = BluntSharingParams::make(Rational(1, 3), report.total, 7919);
    const auto shares = deal_blunt_secret(4242 % params.field_modulus, params, committee, 7);
    std::cout << "dealt " << shares.size() << " shares, threshold " << params.threshold << "\n";

    for (std::size_t i = 0; i < dist.size() && i < 5; ++i) {
        std::cout << "  " << dist.party(i).id << " controls virtual users ["
                  << committee.slots[i].begin << ", " << committee.slots[i].end << ")\n";
    }
    return 0;
}
