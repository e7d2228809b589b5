#include "apa/modules.hpp"
