extern "C" { void grhom_placeholder(void) {} }
