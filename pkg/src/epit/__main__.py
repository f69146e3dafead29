from epit.cli import main

main()
