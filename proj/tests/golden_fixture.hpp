#pragma once

#include <string>

namespace citeforge::fixture {

inline const std::string kGoldenDocument =
    "\\bibliographystyle{plain}\n"
    "Knuth's books \\cite{a,b} describe it.\n"
    "\\nocite{c}\n"
    "\\bibliography{refs}\n";

inline const std::string kRefsBbl =
    "\\begin{thebibliography}{9}\n"
    "\n"
    "\\bibitem{a}\n"
    "Donald~E. Knuth.\n"
    "\\newblock {\\em The TeXbook}.\n"
    "\\newblock Addison-Wesley, 1984.\n"
    "\n"
    "\\bibitem{b}\n"
    "Leslie Lamport.\n"
    "\\newblock {\\em LaTeX: A Document Preparation System}.\n"
    "\\newblock Addison-Wesley, 1986.\n"
    "\n"
    "\\bibitem{c}\n"
    "Oren Patashnik.\n"
    "\\newblock {\\sc BibTeXing}, 1988.\n"
    "\n"
    "\\end{thebibliography}\n";

}  // namespace citeforge::fixture
