#pragma once

// Umbrella header for the swiper toolkit.

#include "swiper/coding.hpp"
#include "swiper/committee.hpp"
#include "swiper/experiment.hpp"
#include "swiper/family.hpp"
#include "swiper/knapsack.hpp"
#include "swiper/oracle.hpp"
#include "swiper/problem.hpp"
#include "swiper/rational.hpp"
#include "swiper/resample.hpp"
#include "swiper/secret_sharing.hpp"
#include "swiper/solver.hpp"
#include "swiper/tickets.hpp"
#include "swiper/weights.hpp"
