from zetaforms.integrations.cli import main

main()
