from powergeom.cli import main

main()
